// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/domain/types.hpp"

#include <charconv>

#include "streetmaps/domain/countries.hpp"

namespace streetmaps {

std::optional<CountryCode> CountryCode::from_alpha2(std::string_view code) {
  if (!is_iso_alpha2(code)) return std::nullopt;
  return CountryCode(std::string(code));
}

std::string theme_value(const StreetRecord& record, ThemeLayer theme) {
  switch (theme) {
    case ThemeLayer::occupation:
      return std::string(to_string(record.occupation_group));
    case ThemeLayer::gender:
      return std::string(to_string(record.gender));
    case ThemeLayer::country:
      return std::string(record.country.str());
    case ThemeLayer::period:
      if (!record.denomination_year) return "unknown";
      return std::to_string(*record.denomination_year / 10 * 10) + "s";
  }
  return "unknown";
}

bool is_theme_value(ThemeLayer theme, std::string_view value) {
  switch (theme) {
    case ThemeLayer::occupation:
      return parse_enum<OccupationGroup>(value).has_value();
    case ThemeLayer::gender:
      return parse_enum<Gender>(value).has_value();
    case ThemeLayer::country:
      return value == "unknown" || is_iso_alpha2(value);
    case ThemeLayer::period: {
      if (value == "unknown") return true;
      // Decade labels: four digits ending in 0, followed by 's'.
      if (value.size() != 5 || value.back() != 's' || value[3] != '0') return false;
      int year = 0;
      auto [p, ec] = std::from_chars(value.data(), value.data() + 4, year);
      return ec == std::errc{} && p == value.data() + 4 && year >= 1000;
    }
  }
  return false;
}

}  // namespace streetmaps
