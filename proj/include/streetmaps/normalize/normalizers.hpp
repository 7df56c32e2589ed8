// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streetmaps/domain/types.hpp"

namespace streetmaps::normalize {

inline constexpr int kMinParsedYear = 1000;
inline constexpr int kMaxParsedYear = 2100;

struct KeywordEntry {
  std::string keyword;
  OccupationGroup group;
};

/// The shipped occupation keyword table (data/occupation_keywords_v1.csv).
const std::vector<KeywordEntry>& occupation_keywords();

inline constexpr int kOccupationTableVersion = 1;

/// Problems with a keyword table: duplicate keywords, unknown groups,
/// keywords that are not already in folded form. Empty when clean.
std::vector<std::string> lint_keyword_table(std::string_view csv);

/// Total mapping of a free-text occupation to its group. The input is
/// case-folded and trimmed, then the longest keyword occurring at word
/// boundaries wins (a trailing plural "s"/"es" is tolerated). Ties go to the
/// earliest occurrence, then the lexicographically smaller keyword. Group
/// identifiers map to themselves; no match and empty input give `other`.
OccupationGroup map_occupation(std::string_view raw);

/// Case-insensitive synonym lookup (English, German, French, one-letter
/// codes). Anything unmatched is `unknown`.
Gender normalize_gender(std::string_view raw);

/// ISO alpha-2 for country names, codes, demonyms and historical states
/// (historical states map to the present-day state of their capital).
CountryCode normalize_country(std::string_view raw);

struct ParsedYear {
  std::optional<int> year;
  std::optional<std::string> warning;
};

/// Accepts YYYY, YYYY-MM-DD (optionally with a time suffix), DD.MM.YYYY,
/// "Month D, YYYY" and "D Month YYYY" (English or German month names).
/// Years outside [1000, 2100] or unparseable text give no year and a warning;
/// blank input gives neither.
ParsedYear parse_year(std::string_view raw);

}  // namespace streetmaps::normalize
