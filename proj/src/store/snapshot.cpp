// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/store/snapshot.hpp"

#include <algorithm>
#include <json.hpp>
#include <random>
#include <set>

#include "streetmaps/domain/errors.hpp"
#include "streetmaps/domain/validate.hpp"
#include "streetmaps/geomatch/geojson.hpp"
#include "streetmaps/geomatch/geometry.hpp"

namespace streetmaps::store {

namespace {

// Tolerance for "representative point lies on the geometry", degrees.
constexpr double kOnLineTolerance = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<std::string> feature_problems(const StreetFeature& f, int latest_year) {
  std::vector<std::string> out;
  for (const auto& v : validate_record(f.record, latest_year)) out.push_back(v.field + ": " + v.rule);
  bool matched = f.match_method != geomatch::MatchMethod::unmatched;
  if (matched) {
    if (!geomatch::has_vertices(f.geometry)) out.push_back("geometry: matched feature without geometry");
    if (!f.representative_point)
      out.push_back("representative_point: missing");
    else if (geomatch::has_vertices(f.geometry) &&
             geomatch::distance_deg(*f.representative_point, f.geometry) > kOnLineTolerance)
      out.push_back("representative_point: not on the geometry");
  } else if (!f.geometry.empty() || f.representative_point) {
    out.push_back("geometry: unmatched feature carries geometry");
  }
  return out;
}

std::vector<std::size_t> merge_sorted(const std::vector<const std::vector<std::size_t>*>& lists) {
  std::vector<std::size_t> out;
  for (const auto* l : lists) out.insert(out.end(), l->begin(), l->end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::shared_ptr<const Snapshot> Snapshot::load(std::string_view geojson) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(geojson);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidSnapshot("snapshot is not JSON", {e.what()});
  }
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" || !doc.contains("features") ||
      !doc["features"].is_array())
    throw InvalidSnapshot("snapshot is not a GeoJSON FeatureCollection", {"type: expected FeatureCollection"});

  std::vector<StreetFeature> features;
  std::vector<std::string> diagnostics;
  std::size_t n = 0;
  for (const auto& f : doc["features"]) {
    ++n;
    try {
      features.push_back(geomatch::feature_from_json(f));
    } catch (const Error& e) {
      std::string id = f.is_object() && f.contains("id") && f["id"].is_string() ? f["id"].get<std::string>() : "";
      diagnostics.push_back("feature #" + std::to_string(n) + (id.empty() ? "" : " (" + id + ")") + ": " + e.what());
    }
  }
  if (!diagnostics.empty())
    throw InvalidSnapshot("snapshot has " + std::to_string(diagnostics.size()) + " invalid feature(s)",
                          std::move(diagnostics));
  return from_features(std::move(features));
}

std::shared_ptr<const Snapshot> Snapshot::from_features(std::vector<StreetFeature> features) {
  std::vector<std::string> diagnostics;
  int latest = current_year();
  std::set<std::string> ids;
  for (const auto& f : features) {
    for (const auto& p : feature_problems(f, latest)) diagnostics.push_back(f.record.record_id + ": " + p);
    if (!ids.insert(f.record.record_id).second)
      diagnostics.push_back(f.record.record_id + ": record_id: duplicate");
  }
  if (!diagnostics.empty())
    throw InvalidSnapshot("snapshot has " + std::to_string(diagnostics.size()) + " problem(s)",
                          std::move(diagnostics));

  std::sort(features.begin(), features.end(),
            [](const StreetFeature& a, const StreetFeature& b) { return a.record.record_id < b.record.record_id; });

  std::shared_ptr<Snapshot> snap(new Snapshot());
  snap->features_ = std::move(features);
  snap->feature_json_.reserve(snap->features_.size());
  for (std::size_t i = 0; i < snap->features_.size(); ++i) {
    const auto& f = snap->features_[i];
    snap->feature_json_.push_back(geomatch::feature_to_json(f).dump());
    auto& idx = snap->cities_[static_cast<std::size_t>(f.record.city)];
    idx.all.push_back(i);
    if (f.record.denomination_year) idx.by_year.emplace_back(*f.record.denomination_year, i);
    for (auto theme : all_values<ThemeLayer>())
      idx.by_theme[static_cast<std::size_t>(theme)][theme_value(f.record, theme)].push_back(i);
  }
  for (auto& idx : snap->cities_) std::sort(idx.by_year.begin(), idx.by_year.end());
  return snap;
}

std::vector<std::size_t> Snapshot::query(const QueryFilter& filter) const {
  check_filter(filter);
  const auto& idx = city_index(filter.city);
  std::vector<std::size_t> candidates;
  if (filter.tags) {
    const auto& values = idx.by_theme[static_cast<std::size_t>(filter.theme)];
    std::vector<const std::vector<std::size_t>*> lists;
    for (const auto& tag : *filter.tags)
      if (auto it = values.find(tag); it != values.end()) lists.push_back(&it->second);
    candidates = merge_sorted(lists);
  } else if (filter.year_range) {
    auto lo = std::lower_bound(idx.by_year.begin(), idx.by_year.end(),
                               std::pair<int, std::size_t>{filter.year_range->from, 0});
    auto hi = std::upper_bound(idx.by_year.begin(), idx.by_year.end(),
                               std::pair<int, std::size_t>{filter.year_range->to, SIZE_MAX});
    for (auto it = lo; it != hi; ++it) candidates.push_back(it->second);
    std::sort(candidates.begin(), candidates.end());
    return candidates;
  } else {
    return idx.all;
  }
  std::erase_if(candidates, [&](std::size_t i) { return !satisfies(features_[i].record, filter); });
  return candidates;
}

const StreetFeature& Snapshot::random_street(const QueryFilter& filter, std::optional<std::uint64_t> seed) const {
  auto hits = query(filter);
  if (hits.empty()) throw NoMatch("no street matches the filter");
  std::mt19937_64 rng(seed ? splitmix64(*seed) : std::random_device{}());
  std::uniform_int_distribution<std::size_t> pick(0, hits.size() - 1);
  return features_[hits[pick(rng)]];
}

std::map<std::string, std::size_t> Snapshot::stats(CityId city, ThemeLayer theme) const {
  std::map<std::string, std::size_t> out;
  for (const auto& [value, list] : city_index(city).by_theme[static_cast<std::size_t>(theme)])
    out[value] = list.size();
  return out;
}

std::string Snapshot::to_geojson(const std::vector<std::size_t>& positions) const {
  std::string out = R"({"type":"FeatureCollection","features":[)";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i) out += ',';
    out += feature_json_[positions[i]];
  }
  out += "]}";
  return out;
}

std::shared_ptr<const Snapshot> SnapshotStore::current() const {
  std::lock_guard lock(mutex_);
  return current_;
}

void SnapshotStore::replace(std::shared_ptr<const Snapshot> next) {
  std::lock_guard lock(mutex_);
  current_.swap(next);
}

}  // namespace streetmaps::store
