// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/geomatch/matcher.hpp"

#include <algorithm>
#include <numeric>

#include "streetmaps/domain/city.hpp"
#include "streetmaps/geomatch/geometry.hpp"
#include "streetmaps/util/text.hpp"

namespace streetmaps::geomatch {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

MatchIndex::MatchIndex(OsmExtract extract, CityId city, LonLat city_center, MatchOptions options)
    : ways_(std::move(extract.ways)), city_(city), center_(city_center), options_(options) {
  std::sort(ways_.begin(), ways_.end(),
            [](const NamedWay& a, const NamedWay& b) { return a.way_id < b.way_id; });
  auto language = language_of(city_);
  std::map<std::string, MultiLineString> district_lines;
  for (std::size_t i = 0; i < ways_.size(); ++i) {
    const auto& way = ways_[i];
    by_exact_[util::fold_key(way.name)].push_back(i);
    by_normalized_[normalize_street_name(way.name, language)].push_back(i);
    if (way.district && has_vertices(way.geometry)) {
      auto& lines = district_lines[util::fold_key(*way.district)];
      lines.insert(lines.end(), way.geometry.begin(), way.geometry.end());
    }
  }
  for (auto& [key, lines] : district_lines) district_centroids_[key] = centroid(lines);
}

const std::optional<LonLat>& MatchIndex::district_centroid(const std::string& district) const {
  static const std::optional<LonLat> kNone;
  auto it = district_centroids_.find(util::fold_key(district));
  return it == district_centroids_.end() ? kNone : it->second;
}

StreetFeature MatchIndex::match(const StreetRecord& record) const {
  if (auto it = by_exact_.find(util::fold_key(record.street_name)); it != by_exact_.end())
    return resolve(record, it->second, MatchMethod::exact);
  auto key = normalize_street_name(record.street_name, language_of(city_));
  if (auto it = by_normalized_.find(key); it != by_normalized_.end())
    return resolve(record, it->second, MatchMethod::normalized);
  StreetFeature unmatched;
  unmatched.record = record;
  return unmatched;
}

StreetFeature MatchIndex::resolve(const StreetRecord& record, const std::vector<std::size_t>& candidates,
                                  MatchMethod method) const {
  // Candidates are ascending indexes into ways_, hence ascending way ids.
  const std::size_t n = candidates.size();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sets.find(i) != sets.find(j) &&
          min_distance_m(ways_[candidates[i]].geometry, ways_[candidates[j]].geometry) <=
              options_.merge_radius_m)
        sets.unite(i, j);

  std::size_t chosen = 0;
  bool single_cluster = true;
  for (std::size_t i = 1; i < n; ++i) single_cluster = single_cluster && sets.find(i) == sets.find(0);
  if (!single_cluster) {
    LonLat reference = center_;
    if (record.district) {
      if (const auto& c = district_centroid(*record.district)) reference = *c;
    }
    double best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double d = haversine_m(centroid(ways_[candidates[i]].geometry), reference);
      if (i == 0 || d < best) {
        best = d;
        chosen = i;
      }
    }
  }

  StreetFeature out;
  out.record = record;
  out.match_method = method;
  auto root = sets.find(chosen);
  for (std::size_t i = 0; i < n; ++i) {
    if (sets.find(i) != root) continue;
    const auto& way = ways_[candidates[i]];
    out.geometry.insert(out.geometry.end(), way.geometry.begin(), way.geometry.end());
    out.way_ids.push_back(way.way_id);
  }
  out.representative_point = representative_point(out.geometry);
  return out;
}

StreetFeature match_street(const StreetRecord& record, const OsmExtract& extract, const MatchOptions& options) {
  MatchIndex index(extract, record.city, default_city_config(record.city).center, options);
  return index.match(record);
}

}  // namespace streetmaps::geomatch
