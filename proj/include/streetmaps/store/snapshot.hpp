// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "streetmaps/domain/types.hpp"
#include "streetmaps/geomatch/matcher.hpp"
#include "streetmaps/store/query_filter.hpp"

namespace streetmaps::store {

using geomatch::StreetFeature;

/// Immutable, indexed set of street features. Features are held in
/// record_id order, and every result keeps that order.
class Snapshot {
 public:
  /// Parses a GeoJSON FeatureCollection. Throws InvalidSnapshot listing every
  /// offending feature.
  static std::shared_ptr<const Snapshot> load(std::string_view geojson);

  /// Validates and indexes already-parsed features. Throws InvalidSnapshot.
  static std::shared_ptr<const Snapshot> from_features(std::vector<StreetFeature> features);

  std::size_t size() const { return features_.size(); }
  std::size_t count(CityId city) const { return city_index(city).all.size(); }
  const std::vector<StreetFeature>& features() const { return features_; }
  const StreetFeature& feature(std::size_t i) const { return features_[i]; }

  /// Positions (into features()) of the matching features, ascending.
  /// Throws InvalidFilter for an invalid filter.
  std::vector<std::size_t> query(const QueryFilter& filter) const;

  /// Uniform draw from query(filter). With a seed the draw is reproducible.
  /// Throws NoMatch on an empty result.
  const StreetFeature& random_street(const QueryFilter& filter, std::optional<std::uint64_t> seed) const;

  /// Feature count per theme value for one city; sums to count(city).
  std::map<std::string, std::size_t> stats(CityId city, ThemeLayer theme) const;

  /// Compact GeoJSON of the given features, in the given order.
  std::string to_geojson(const std::vector<std::size_t>& positions) const;
  /// Compact GeoJSON Feature.
  const std::string& feature_json(std::size_t position) const { return feature_json_[position]; }

 private:
  struct CityIndex {
    std::vector<std::size_t> all;
    std::vector<std::pair<int, std::size_t>> by_year;  // sorted
    std::array<std::map<std::string, std::vector<std::size_t>>, enum_count<ThemeLayer>()> by_theme;
  };

  Snapshot() = default;
  const CityIndex& city_index(CityId city) const { return cities_[static_cast<std::size_t>(city)]; }

  std::vector<StreetFeature> features_;
  std::vector<std::string> feature_json_;
  std::array<CityIndex, enum_count<CityId>()> cities_;
};

/// Holder of the current snapshot. Readers take a reference-counted handle,
/// so a replacement never invalidates a query in flight.
class SnapshotStore {
 public:
  std::shared_ptr<const Snapshot> current() const;
  void replace(std::shared_ptr<const Snapshot> next);

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const Snapshot> current_;
};

}  // namespace streetmaps::store
