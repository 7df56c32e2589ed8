// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/store/query_filter.hpp"

#include "streetmaps/domain/errors.hpp"

namespace streetmaps::store {

void check_filter(const QueryFilter& filter) {
  if (filter.year_range && filter.year_range->from > filter.year_range->to)
    throw InvalidFilter("from", "from (" + std::to_string(filter.year_range->from) + ") is after to (" +
                                    std::to_string(filter.year_range->to) + ")");
  if (filter.tags) {
    for (const auto& tag : *filter.tags)
      if (!is_theme_value(filter.theme, tag))
        throw InvalidFilter("tags", "'" + tag + "' is not a " + std::string(to_string(filter.theme)) + " value");
  }
}

bool satisfies(const StreetRecord& record, const QueryFilter& filter) {
  if (record.city != filter.city) return false;
  if (filter.year_range) {
    if (!record.denomination_year) return false;
    if (*record.denomination_year < filter.year_range->from || *record.denomination_year > filter.year_range->to)
      return false;
  }
  if (filter.tags && !filter.tags->contains(theme_value(record, filter.theme))) return false;
  return true;
}

}  // namespace streetmaps::store
