// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streetmaps/domain/geo.hpp"

namespace streetmaps::geomatch {

struct NamedWay {
  std::string way_id;
  std::string name;
  MultiLineString geometry;
  std::optional<std::string> district;
};

/// Named ways of one city, pre-filtered from OpenStreetMap.
struct OsmExtract {
  std::vector<NamedWay> ways;
};

/// Reads a GeoJSON FeatureCollection of LineString/MultiLineString features.
/// The way id comes from properties.way_id, properties["@id"] or the
/// feature id; the name from properties.name; the district from
/// properties.district or properties["addr:suburb"]. Features without a name
/// are skipped (they cannot be matched).
///
/// Throws Error when an invariant fails: duplicate way ids, empty geometry,
/// coordinates outside WGS84 range.
OsmExtract parse_osm_extract(std::string_view geojson);

}  // namespace streetmaps::geomatch
