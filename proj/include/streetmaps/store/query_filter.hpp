// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <string>

#include "streetmaps/domain/types.hpp"

namespace streetmaps::store {

/// Inclusive denomination-year interval.
struct YearInterval {
  int from = 0;
  int to = 0;
  friend bool operator==(const YearInterval&, const YearInterval&) = default;
};

/// City, theme layer, optional year range and optional tag set. Tags are
/// values of the theme: occupation group ids, genders, country codes or
/// decade labels.
struct QueryFilter {
  CityId city = CityId::paris;
  ThemeLayer theme = ThemeLayer::occupation;
  std::optional<YearInterval> year_range;
  std::optional<std::set<std::string>> tags;
  friend bool operator==(const QueryFilter&, const QueryFilter&) = default;
};

/// Throws InvalidFilter naming "from" for an inverted range and "tags" for a
/// value outside the theme's domain.
void check_filter(const QueryFilter& filter);

/// The filter predicate for one record. A record without a denomination year
/// never satisfies a year range.
bool satisfies(const StreetRecord& record, const QueryFilter& filter);

}  // namespace streetmaps::store
