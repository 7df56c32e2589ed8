// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "streetmaps/domain/city.hpp"
#include "streetmaps/geomatch/geometry.hpp"
#include "streetmaps/pipeline/pipeline.hpp"

namespace streetmaps::testing {

namespace fs = std::filesystem;

fs::path fixtures_dir() { return STREETMAPS_FIXTURES_DIR; }
fs::path test_data_dir() { return STREETMAPS_TEST_DATA_DIR; }

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("streetmaps-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

namespace {

const std::vector<std::string> kGivenNames{"Ada", "Marie", "Victor", "Louise", "Franz", "Rosa", "Isaac",
                                           "Bertha", "George", "Hedy", "Jean", "Emmeline"};
const std::vector<std::string> kFamilyNames{"Curie", "Hugo", "Michel", "Schubert", "Mayreder", "Newton",
                                            "Suttner", "Sand", "Lamarr", "Jaures", "Pankhurst", "Lovelace"};
const std::vector<std::string> kCountries{"FR", "AT", "GB", "US", "DE", "PL", "IT", "CZ", "HU", "IE"};

}  // namespace

StreetRecord random_record(Rng& rng, CityId city, const std::string& record_id) {
  StreetRecord r;
  r.record_id = record_id;
  r.city = city;
  r.street_name = rng.pick(kFamilyNames) + " Street " + record_id;
  r.honoree_name = rng.pick(kGivenNames) + " " + rng.pick(kFamilyNames);
  if (rng.chance(0.8)) r.district = "District " + std::to_string(rng.between(1, 20));
  if (rng.chance(0.85)) r.denomination_year = rng.between(1700, 2020);
  r.gender = all_values<Gender>()[static_cast<std::size_t>(rng.between(0, 2))];
  r.occupation_group = all_values<OccupationGroup>()[static_cast<std::size_t>(rng.between(0, 16))];
  r.occupation_raw = std::string(to_string(r.occupation_group));
  if (rng.chance(0.9)) r.country = *CountryCode::from_alpha2(rng.pick(kCountries));
  if (rng.chance(0.7)) {
    int birth = rng.between(1500, 1950);
    r.birth_year = birth;
    if (rng.chance(0.8)) r.death_year = birth + rng.between(1, 90);
  }
  if (rng.chance(0.5)) r.honoree_url = "https://en.wikipedia.org/wiki/" + record_id;
  r.source = all_values<Source>()[static_cast<std::size_t>(rng.between(0, 3))];
  return r;
}

geomatch::StreetFeature random_feature(Rng& rng, CityId city, const std::string& record_id) {
  geomatch::StreetFeature f;
  f.record = random_record(rng, city, record_id);
  auto c = default_city_config(city).center;
  LonLat a{c.lon + rng.real(-0.05, 0.05), c.lat + rng.real(-0.03, 0.03)};
  LineString line{a};
  int n = rng.between(1, 3);
  for (int i = 0; i < n; ++i) line.push_back({line.back().lon + rng.real(-0.003, 0.003), line.back().lat + rng.real(-0.002, 0.002)});
  f.geometry = {line};
  f.representative_point = geomatch::representative_point(f.geometry);
  f.match_method = rng.chance(0.8) ? geomatch::MatchMethod::exact : geomatch::MatchMethod::normalized;
  f.way_ids = {std::to_string(rng.between(1, 1000000))};
  return f;
}

store::QueryFilter random_filter(Rng& rng, const std::vector<geomatch::StreetFeature>& pool) {
  store::QueryFilter f;
  f.city = all_values<CityId>()[static_cast<std::size_t>(rng.between(0, 3))];
  f.theme = all_values<ThemeLayer>()[static_cast<std::size_t>(rng.between(0, 3))];
  if (rng.chance(0.5)) {
    int a = rng.between(1650, 2030);
    int b = rng.between(1650, 2030);
    f.year_range = store::YearInterval{std::min(a, b), std::max(a, b)};
  }
  if (rng.chance(0.6)) {
    std::set<std::string> tags;
    int n = rng.between(0, 4);
    for (int i = 0; i < n; ++i) {
      const auto& r = rng.pick(pool).record;
      tags.insert(oracle_theme_value(r, f.theme));
    }
    if (f.theme == ThemeLayer::occupation && rng.chance(0.2)) tags.insert("royals");
    f.tags = std::move(tags);
  }
  return f;
}

std::string oracle_theme_value(const StreetRecord& r, ThemeLayer theme) {
  switch (theme) {
    case ThemeLayer::occupation:
      return std::string(to_string(r.occupation_group));
    case ThemeLayer::gender:
      return r.gender == Gender::female ? "female" : r.gender == Gender::male ? "male" : "unknown";
    case ThemeLayer::country:
      return r.country.is_unknown() ? "unknown" : std::string(r.country.str());
    case ThemeLayer::period:
      if (!r.denomination_year) return "unknown";
      return std::to_string(*r.denomination_year - *r.denomination_year % 10) + "s";
  }
  return {};
}

std::vector<std::string> oracle_query(const std::vector<geomatch::StreetFeature>& features,
                                      const store::QueryFilter& filter) {
  std::vector<std::string> out;
  for (const auto& f : features) {
    const auto& r = f.record;
    if (r.city != filter.city) continue;
    if (filter.year_range) {
      if (!r.denomination_year) continue;
      if (*r.denomination_year < filter.year_range->from) continue;
      if (*r.denomination_year > filter.year_range->to) continue;
    }
    if (filter.tags && filter.tags->count(oracle_theme_value(r, filter.theme)) == 0) continue;
    out.push_back(r.record_id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double chi_square_uniform(const std::map<std::string, int>& counts, int categories, int draws) {
  double expected = static_cast<double>(draws) / categories;
  double stat = 0;
  int seen = 0;
  for (const auto& [k, n] : counts) {
    stat += (n - expected) * (n - expected) / expected;
    ++seen;
  }
  stat += (categories - seen) * expected;  // categories never drawn
  return stat;
}

SyntheticStreets synthetic_streets(Rng& rng, int ways, int perturbed) {
  static const std::vector<std::pair<std::string, std::string>> kinds{
      {"Road", "Rd"}, {"Avenue", "Ave"}, {"Lane", "Ln"}, {"Square", "Sq"},
      {"Place", "Pl"}, {"Drive", "Dr"}, {"Terrace", "Ter"}, {"Gardens", "Gdns"}};
  static const std::vector<std::string> given{"Ada", "Mary", "John", "Grace", "Isaac", "Emmeline",
                                              "Charles", "Florence", "Rosalind", "Alan"};
  static const std::vector<std::string> family{"Lovelace", "Seacole", "Keats", "Darling", "Newton",
                                               "Pankhurst", "Dickens", "Nightingale", "Franklin",
                                               "Turing", "Brunel", "Austen"};
  SyntheticStreets out;
  auto c = default_city_config(CityId::london).center;
  std::set<std::string> used;
  for (int i = 0; i < ways; ++i) {
    std::string person;
    const std::pair<std::string, std::string>* kind = nullptr;
    do {
      person = rng.pick(given) + " " + rng.pick(family);
      kind = &rng.pick(kinds);
    } while (!used.insert(person + " " + kind->first).second);

    geomatch::NamedWay way;
    way.way_id = std::to_string(900000 + i * 7);
    way.name = person + " " + kind->first;
    LonLat a{c.lon + rng.real(-0.1, 0.1), c.lat + rng.real(-0.05, 0.05)};
    LineString line{a};
    for (int k = rng.between(1, 4); k > 0; --k)
      line.push_back({line.back().lon + rng.real(-0.002, 0.002), line.back().lat + rng.real(-0.001, 0.001)});
    way.geometry = {line};
    out.extract.ways.push_back(way);

    auto r = random_record(rng, CityId::london, "syn-" + std::to_string(i));
    r.street_name = i < perturbed ? person + " " + kind->second : way.name;
    r.district.reset();
    out.records.push_back(r);
    out.expected_way.push_back(way.way_id);
  }
  std::shuffle(out.extract.ways.begin(), out.extract.ways.end(), rng.engine());
  return out;
}

std::filesystem::path run_fixture_pipeline(const std::string& name) {
  auto config = pipeline::load_pipeline_config(fixtures_dir() / "pipeline.json");
  config.output_dir = scratch_dir(name);
  auto summary = pipeline::run_pipeline(config);
  if (!summary.ok()) throw std::runtime_error("fixture pipeline failed:\n" + pipeline::summary_table(summary));
  return config.output_dir;
}

}  // namespace streetmaps::testing
