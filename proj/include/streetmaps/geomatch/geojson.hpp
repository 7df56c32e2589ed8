// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "streetmaps/domain/geo.hpp"
#include "streetmaps/geomatch/matcher.hpp"

namespace streetmaps::geomatch {

/// "LineString" for one member, "MultiLineString" otherwise.
nlohmann::ordered_json lines_to_geojson(const MultiLineString& geometry);

/// Accepts LineString and MultiLineString geometries with at least two
/// in-range positions per line; a third (elevation) coordinate is ignored.
/// Throws Error otherwise.
MultiLineString lines_from_geojson(const nlohmann::json& geometry);

/// RFC 7946 Feature. Properties carry every StreetRecord field under its
/// canonical column name, plus representative_point, match_method, way_ids.
nlohmann::ordered_json feature_to_json(const StreetFeature& feature);

/// Inverse of feature_to_json. Throws Error naming the offending property.
StreetFeature feature_from_json(const nlohmann::json& feature);

/// FeatureCollection of `features` in the given order, compact serialization.
std::string write_feature_collection(const std::vector<StreetFeature>& features);

}  // namespace streetmaps::geomatch
