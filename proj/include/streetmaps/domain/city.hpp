// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "streetmaps/domain/geo.hpp"
#include "streetmaps/domain/types.hpp"

namespace streetmaps {

struct YearRange {
  int min_year = 0;
  int max_year = 0;
  friend bool operator==(const YearRange&, const YearRange&) = default;
};

/// Where a city's records come from. `location` is an endpoint URL, a file or
/// a directory depending on `kind`; `entity` is the knowledge-base id of the
/// city for SPARQL sources.
struct SourceDescriptor {
  Source kind = Source::curated;
  std::string location;
  std::string entity;
  friend bool operator==(const SourceDescriptor&, const SourceDescriptor&) = default;
};

struct CityConfig {
  CityId city = CityId::paris;
  std::string display_name;
  BoundingBox bounding_box;
  LonLat center;
  YearRange year_range;
  std::vector<SourceDescriptor> sources;
  friend bool operator==(const CityConfig&, const CityConfig&) = default;
};

/// Built-in configuration for the four supported cities.
const std::vector<CityConfig>& default_city_configs();

const CityConfig& default_city_config(CityId city);

/// Empty when the config is consistent (bbox contains center, ordered years).
std::vector<std::string> check_city_config(const CityConfig& config);

}  // namespace streetmaps
