// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace streetmaps {

/// WGS84 position, degrees.
struct LonLat {
  double lon = 0.0;
  double lat = 0.0;
  friend bool operator==(const LonLat&, const LonLat&) = default;
};

struct BoundingBox {
  double min_lon = 0.0;
  double min_lat = 0.0;
  double max_lon = 0.0;
  double max_lat = 0.0;

  bool contains(LonLat p) const {
    return p.lon >= min_lon && p.lon <= max_lon && p.lat >= min_lat && p.lat <= max_lat;
  }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

using LineString = std::vector<LonLat>;

/// A LineString is represented as a one-member MultiLineString.
using MultiLineString = std::vector<LineString>;

inline bool in_wgs84_range(LonLat p) {
  return p.lon >= -180.0 && p.lon <= 180.0 && p.lat >= -90.0 && p.lat <= 90.0;
}

/// Great-circle distance in metres (spherical earth, R = 6371008.8 m).
double haversine_m(LonLat a, LonLat b);

}  // namespace streetmaps
