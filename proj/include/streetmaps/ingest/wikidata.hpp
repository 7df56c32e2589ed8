// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "streetmaps/domain/types.hpp"
#include "streetmaps/ingest/http.hpp"
#include "streetmaps/ingest/raw_record.hpp"

namespace streetmaps::ingest {

/// Knowledge-base class whose instances count as person eponyms.
inline constexpr std::string_view kPersonClassIri = "http://www.wikidata.org/entity/Q5";

/// SPARQL selecting streets located in `city_entity` (e.g. "Q90") together
/// with their eponym, the eponym's class and the honoree attributes.
std::string street_eponym_query(std::string_view city_entity);

/// Turns a SPARQL 1.1 JSON results document into RawRecords. Bindings are
/// grouped by street IRI (first value per field wins); streets without a
/// person eponym are dropped. Throws MalformedResponse.
std::vector<RawRecord> parse_street_bindings(std::string_view results_json, CityId city,
                                             const Clock& clock);

struct WikidataOptions {
  std::string city_entity;  // defaults to the city's configured entity
  RetryPolicy retry;
  Clock clock = system_clock();
};

/// Runs the street-eponym query against `endpoint`. Throws SourceUnavailable
/// or MalformedResponse.
std::vector<RawRecord> fetch_wikidata_streets(CityId city, const std::string& endpoint,
                                              const WikidataOptions& options = {});

}  // namespace streetmaps::ingest
