// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "streetmaps/domain/types.hpp"
#include "streetmaps/geomatch/matcher.hpp"
#include "streetmaps/geomatch/osm_extract.hpp"
#include "streetmaps/store/query_filter.hpp"

namespace streetmaps::testing {

std::filesystem::path fixtures_dir();
std::filesystem::path test_data_dir();

/// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(between(0, static_cast<int>(v.size()) - 1))];
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// A record that passes validate_record, with some optional fields absent.
StreetRecord random_record(Rng& rng, CityId city, const std::string& record_id);

/// A matched feature with a short line near the city center.
geomatch::StreetFeature random_feature(Rng& rng, CityId city, const std::string& record_id);

/// Filters over the given cities; tags drawn from the values present in
/// `pool` plus occasional absent ones.
store::QueryFilter random_filter(Rng& rng, const std::vector<geomatch::StreetFeature>& pool);

/// Theme value computed from scratch (decade labels, ISO codes, ...).
std::string oracle_theme_value(const StreetRecord& r, ThemeLayer theme);

/// Record ids satisfying the filter by a linear scan, sorted.
std::vector<std::string> oracle_query(const std::vector<geomatch::StreetFeature>& features,
                                      const store::QueryFilter& filter);

/// A London-style extract of `ways` distinctly named ways, one record per
/// way. The first `perturbed` records spell their street type abbreviated
/// ("Rd", "Ave", ...), so they can only match through normalization.
struct SyntheticStreets {
  geomatch::OsmExtract extract;
  std::vector<StreetRecord> records;
  std::vector<std::string> expected_way;  // per record
};
SyntheticStreets synthetic_streets(Rng& rng, int ways, int perturbed);

/// Runs the bundled fixture pipeline (all four cities) into a fresh scratch
/// directory and returns it. Throws when the run is not clean.
std::filesystem::path run_fixture_pipeline(const std::string& name);

/// Pearson statistic against a uniform expectation.
double chi_square_uniform(const std::map<std::string, int>& counts, int categories, int draws);

inline constexpr double kChiSquare999Df9 = 27.877164871256568;

}  // namespace streetmaps::testing
