// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "streetmaps/ingest/raw_record.hpp"

namespace streetmaps::ingest {

/// Extracts a street from a structured-wiki street page. The page must carry
/// an infobox table (class containing "infobox") of label/value rows;
/// labels are matched in German or English and unknown labels are ignored.
/// The street name falls back to the page heading when the infobox has no
/// name row. Relative links are resolved against `page_url`.
///
/// Throws NotAStreetPage when there is no infobox or no street name.
RawRecord parse_wiki_street_page(std::string_view html, const std::string& page_url = {},
                                 const Clock& clock = system_clock());

/// Decodes named (&amp; &lt; &gt; &quot; &apos; &nbsp;) and numeric entities.
std::string decode_html_entities(std::string_view text);

}  // namespace streetmaps::ingest
