// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/domain/geo.hpp"

#include <cmath>
#include <numbers>

namespace streetmaps {

double haversine_m(LonLat a, LonLat b) {
  constexpr double kEarthRadius = 6371008.8;
  constexpr double kRad = std::numbers::pi / 180.0;
  double dlat = (b.lat - a.lat) * kRad;
  double dlon = (b.lon - a.lon) * kRad;
  double s = std::sin(dlat / 2) * std::sin(dlat / 2) +
             std::cos(a.lat * kRad) * std::cos(b.lat * kRad) * std::sin(dlon / 2) *
                 std::sin(dlon / 2);
  return 2 * kEarthRadius * std::asin(std::min(1.0, std::sqrt(s)));
}

}  // namespace streetmaps
