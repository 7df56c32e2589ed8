// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "streetmaps/domain/geo.hpp"

namespace streetmaps::geomatch {

/// Sum of great-circle segment lengths, metres.
double length_m(const LineString& line);

/// True when the geometry has at least one vertex.
bool has_vertices(const MultiLineString& geometry);

/// Midpoint by arc length of the longest member line (first one on ties).
/// The point is interpolated inside a segment, so it lies on the line.
/// A zero-length member yields its first vertex. Throws EmptyGeometry.
LonLat representative_point(const MultiLineString& geometry);

/// Length-weighted mean of segment midpoints; vertex mean when every member
/// has zero length. Throws EmptyGeometry.
LonLat centroid(const MultiLineString& geometry);

/// Smallest distance between the two polylines, metres, using a local
/// equirectangular projection (accurate for the few-km spans of a city).
double min_distance_m(const MultiLineString& a, const MultiLineString& b);

/// Planar distance in degrees from `p` to the nearest segment of `geometry`.
double distance_deg(LonLat p, const MultiLineString& geometry);

}  // namespace streetmaps::geomatch
