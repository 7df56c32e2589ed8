// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "streetmaps/domain/geo.hpp"
#include "streetmaps/domain/types.hpp"
#include "streetmaps/geomatch/osm_extract.hpp"
#include "streetmaps/geomatch/street_name.hpp"

namespace streetmaps::geomatch {

enum class MatchMethod { exact, normalized, unmatched };

}  // namespace streetmaps::geomatch

template <>
struct streetmaps::EnumNames<streetmaps::geomatch::MatchMethod> {
  static constexpr std::array<std::string_view, 3> names{"exact", "normalized", "unmatched"};
};

namespace streetmaps::geomatch {

inline std::optional<MatchMethod> parse_match_method(std::string_view s) {
  return parse_enum<MatchMethod>(s);
}

/// A street joined with its map geometry. Unmatched features have an empty
/// geometry and no representative point.
struct StreetFeature {
  StreetRecord record;
  MultiLineString geometry;
  std::optional<LonLat> representative_point;
  MatchMethod match_method = MatchMethod::unmatched;
  std::vector<std::string> way_ids;  // sorted
};

struct MatchOptions {
  /// Same-name ways whose gaps are all within this distance merge into one
  /// street.
  double merge_radius_m = 2000.0;
};

/// Immutable lookup structure over one city's extract; safe to share
/// between threads. Results do not depend on the order of the extract.
class MatchIndex {
 public:
  MatchIndex(OsmExtract extract, CityId city, LonLat city_center, MatchOptions options = {});

  /// Exact case-folded name first, then normalized name. Several candidates
  /// merge when they form one cluster under the merge radius; otherwise the
  /// candidate nearest the record's district centroid (or the city center)
  /// wins, ties broken by way id.
  StreetFeature match(const StreetRecord& record) const;

  const std::optional<LonLat>& district_centroid(const std::string& district) const;

 private:
  StreetFeature resolve(const StreetRecord& record, const std::vector<std::size_t>& candidates,
                        MatchMethod method) const;

  std::vector<NamedWay> ways_;  // sorted by way_id
  CityId city_;
  LonLat center_;
  MatchOptions options_;
  std::map<std::string, std::vector<std::size_t>> by_exact_;
  std::map<std::string, std::vector<std::size_t>> by_normalized_;
  std::map<std::string, std::optional<LonLat>> district_centroids_;
};

/// Convenience for one-off matching; uses the city's configured center.
StreetFeature match_street(const StreetRecord& record, const OsmExtract& extract,
                           const MatchOptions& options = {});

}  // namespace streetmaps::geomatch
