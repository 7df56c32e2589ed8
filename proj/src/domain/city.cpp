// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/domain/city.hpp"

#include <stdexcept>

namespace streetmaps {

const std::vector<CityConfig>& default_city_configs() {
  // Year ranges are the denomination spans of the published city datasets.
  static const std::vector<CityConfig> configs{
      {CityId::paris,
       "Paris",
       {2.224, 48.815, 2.470, 48.902},
       {2.3522, 48.8566},
       {1202, 2011},
       {{Source::wikidata, "https://query.wikidata.org/sparql", "Q90"}}},
      {CityId::vienna,
       "Vienna",
       {16.182, 48.118, 16.578, 48.323},
       {16.3738, 48.2082},
       {1778, 2018},
       {{Source::wikihistory, "https://www.geschichtewiki.wien.gv.at", ""}}},
      {CityId::london,
       "London",
       {-0.510, 51.286, 0.334, 51.692},
       {-0.1276, 51.5072},
       {1030, 2013},
       {{Source::annotated_csv, "", ""}}},
      {CityId::newyork,
       "New York",
       {-74.259, 40.477, -73.700, 40.917},
       {-74.0060, 40.7128},
       {1998, 2013},
       {{Source::curated, "http://nycstreets.info", ""}}},
  };
  return configs;
}

const CityConfig& default_city_config(CityId city) {
  for (const auto& c : default_city_configs())
    if (c.city == city) return c;
  throw std::logic_error("no default config for city");
}

std::vector<std::string> check_city_config(const CityConfig& config) {
  std::vector<std::string> problems;
  if (config.display_name.empty()) problems.emplace_back("display_name is empty");
  const auto& b = config.bounding_box;
  if (b.min_lon > b.max_lon || b.min_lat > b.max_lat)
    problems.emplace_back("bounding_box corners are inverted");
  if (!in_wgs84_range({b.min_lon, b.min_lat}) || !in_wgs84_range({b.max_lon, b.max_lat}))
    problems.emplace_back("bounding_box outside WGS84 range");
  if (!b.contains(config.center)) problems.emplace_back("bounding_box does not contain center");
  if (config.year_range.min_year > config.year_range.max_year)
    problems.emplace_back("year_range min_year > max_year");
  return problems;
}

}  // namespace streetmaps
