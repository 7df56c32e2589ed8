// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/geomatch/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "streetmaps/domain/errors.hpp"

namespace streetmaps::geomatch {

namespace {

struct Xy {
  double x;
  double y;
};

double point_segment(Xy p, Xy a, Xy b) {
  double dx = b.x - a.x, dy = b.y - a.y;
  double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  double qx = a.x + t * dx - p.x, qy = a.y + t * dy - p.y;
  return std::sqrt(qx * qx + qy * qy);
}

double cross(Xy o, Xy a, Xy b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Proper or touching intersection of segments ab and cd.
bool segments_intersect(Xy a, Xy b, Xy c, Xy d) {
  double d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

}  // namespace

double length_m(const LineString& line) {
  double total = 0;
  for (std::size_t i = 1; i < line.size(); ++i) total += haversine_m(line[i - 1], line[i]);
  return total;
}

bool has_vertices(const MultiLineString& geometry) {
  for (const auto& line : geometry)
    if (!line.empty()) return true;
  return false;
}

LonLat representative_point(const MultiLineString& geometry) {
  const LineString* longest = nullptr;
  double longest_len = -1;
  for (const auto& line : geometry) {
    if (line.empty()) continue;
    double len = length_m(line);
    if (len > longest_len) {
      longest = &line;
      longest_len = len;
    }
  }
  if (!longest) throw EmptyGeometry("representative point of an empty geometry");
  if (longest_len <= 0) return longest->front();

  double half = longest_len / 2;
  double walked = 0;
  for (std::size_t i = 1; i < longest->size(); ++i) {
    LonLat a = (*longest)[i - 1], b = (*longest)[i];
    double seg = haversine_m(a, b);
    if (seg > 0 && walked + seg >= half) {
      double t = (half - walked) / seg;
      return {a.lon + t * (b.lon - a.lon), a.lat + t * (b.lat - a.lat)};
    }
    walked += seg;
  }
  return longest->back();
}

LonLat centroid(const MultiLineString& geometry) {
  double wx = 0, wy = 0, wsum = 0;
  double vx = 0, vy = 0;
  std::size_t vn = 0;
  for (const auto& line : geometry) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      vx += line[i].lon;
      vy += line[i].lat;
      ++vn;
      if (i == 0) continue;
      double w = haversine_m(line[i - 1], line[i]);
      wx += w * (line[i - 1].lon + line[i].lon) / 2;
      wy += w * (line[i - 1].lat + line[i].lat) / 2;
      wsum += w;
    }
  }
  if (vn == 0) throw EmptyGeometry("centroid of an empty geometry");
  if (wsum > 0) return {wx / wsum, wy / wsum};
  return {vx / static_cast<double>(vn), vy / static_cast<double>(vn)};
}

double min_distance_m(const MultiLineString& a, const MultiLineString& b) {
  if (!has_vertices(a) || !has_vertices(b)) throw EmptyGeometry("distance to an empty geometry");
  LonLat origin{};
  for (const auto& line : a)
    if (!line.empty()) {
      origin = line.front();
      break;
    }
  constexpr double kMetresPerDegree = 6371008.8 * std::numbers::pi / 180.0;
  double kx = kMetresPerDegree * std::cos(origin.lat * std::numbers::pi / 180.0);
  auto project = [&](LonLat p) { return Xy{(p.lon - origin.lon) * kx, (p.lat - origin.lat) * kMetresPerDegree}; };

  auto one_way = [&](const MultiLineString& from, const MultiLineString& to) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& fl : from)
      for (LonLat v : fl) {
        Xy p = project(v);
        for (const auto& tl : to) {
          if (tl.size() == 1) best = std::min(best, point_segment(p, project(tl[0]), project(tl[0])));
          for (std::size_t i = 1; i < tl.size(); ++i)
            best = std::min(best, point_segment(p, project(tl[i - 1]), project(tl[i])));
        }
      }
    return best;
  };
  for (const auto& la : a)
    for (std::size_t i = 1; i < la.size(); ++i)
      for (const auto& lb : b)
        for (std::size_t j = 1; j < lb.size(); ++j)
          if (segments_intersect(project(la[i - 1]), project(la[i]), project(lb[j - 1]), project(lb[j])))
            return 0.0;
  // Polylines that do not cross are closest at a vertex of one of them.
  return std::min(one_way(a, b), one_way(b, a));
}

double distance_deg(LonLat p, const MultiLineString& geometry) {
  double best = std::numeric_limits<double>::infinity();
  Xy q{p.lon, p.lat};
  for (const auto& line : geometry) {
    if (line.size() == 1) best = std::min(best, point_segment(q, {line[0].lon, line[0].lat}, {line[0].lon, line[0].lat}));
    for (std::size_t i = 1; i < line.size(); ++i)
      best = std::min(best, point_segment(q, {line[i - 1].lon, line[i - 1].lat}, {line[i].lon, line[i].lat}));
  }
  return best;
}

}  // namespace streetmaps::geomatch
