// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include "streetmaps/domain/city.hpp"
#include "streetmaps/domain/countries.hpp"
#include "streetmaps/domain/errors.hpp"
#include "streetmaps/domain/record_csv.hpp"
#include "streetmaps/domain/validate.hpp"
#include "streetmaps/util/csv.hpp"
#include "support.hpp"

using namespace streetmaps;

namespace {

StreetRecord well_formed() {
  StreetRecord r;
  r.record_id = "paris-1";
  r.street_name = "Rue Molière";
  r.city = CityId::paris;
  r.district = "1er arrondissement";
  r.denomination_year = 1867;
  r.honoree_name = "Molière";
  r.gender = Gender::male;
  r.occupation_raw = "playwright";
  r.occupation_group = OccupationGroup::writers;
  r.country = *CountryCode::from_alpha2("FR");
  r.birth_year = 1622;
  r.death_year = 1673;
  r.source = Source::wikidata;
  return r;
}

bool has_field(const std::vector<Violation>& v, const std::string& field) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.field == field; });
}

}  // namespace

TEST_CASE("validate_record: well-formed record has no violations") {
  CHECK(validate_record(well_formed(), 2024).empty());
}

TEST_CASE("validate_record: birth after death") {
  auto r = well_formed();
  r.birth_year = 1900;
  r.death_year = 1850;
  auto v = validate_record(r, 2024);
  REQUIRE(v.size() == 1);
  CHECK(v[0].field == "birth_year");
}

TEST_CASE("validate_record: the Paris minimum 1202 is accepted") {
  auto r = well_formed();
  r.denomination_year = 1202;
  CHECK(validate_record(r, 2024).empty());
}

TEST_CASE("validate_record: each invariant names its field") {
  auto r = well_formed();
  r.street_name.clear();
  CHECK(has_field(validate_record(r, 2024), "street_name"));
  r = well_formed();
  r.honoree_name = "  ";
  CHECK(has_field(validate_record(r, 2024), "honoree_name"));
  r = well_formed();
  r.denomination_year = 999;
  CHECK(has_field(validate_record(r, 2024), "denomination_year"));
  r.denomination_year = 2025;
  CHECK(has_field(validate_record(r, 2024), "denomination_year"));
  r = well_formed();
  r.record_id.clear();
  CHECK(has_field(validate_record(r, 2024), "record_id"));
  r = well_formed();
  r.birth_year = r.death_year;
  CHECK(has_field(validate_record(r, 2024), "birth_year"));
}

TEST_CASE("validate_record is pure") {
  auto r = well_formed();
  r.birth_year = 2000;
  CHECK(validate_record(r, 2024) == validate_record(r, 2024));
}

TEST_CASE("validate_dataset reports duplicate ids") {
  std::vector<StreetRecord> rs{well_formed(), well_formed()};
  auto v = validate_dataset(rs, 2024);
  CHECK(has_field(v, "paris-1: record_id"));
}

TEST_CASE("enums are closed with the documented sizes") {
  CHECK(enum_count<OccupationGroup>() == 17);
  CHECK(enum_count<CityId>() == 4);
  CHECK(enum_count<ThemeLayer>() == 4);
  CHECK(to_string(OccupationGroup::other) == "other");
  CHECK(parse_enum<CityId>("newyork") == CityId::newyork);
  CHECK_FALSE(parse_enum<CityId>("Paris").has_value());
  for (auto g : all_values<OccupationGroup>()) CHECK(parse_enum<OccupationGroup>(to_string(g)) == g);
}

TEST_CASE("country codes") {
  CHECK(CountryCode::from_alpha2("AT")->str() == "AT");
  CHECK_FALSE(CountryCode::from_alpha2("at").has_value());
  CHECK_FALSE(CountryCode::from_alpha2("XX").has_value());
  CHECK(CountryCode::unknown().str() == "unknown");
  CHECK(iso_countries().size() == 249);
  CHECK(is_iso_alpha2("JM"));
}

TEST_CASE("theme values and their domains") {
  auto r = well_formed();
  CHECK(theme_value(r, ThemeLayer::occupation) == "writers");
  CHECK(theme_value(r, ThemeLayer::gender) == "male");
  CHECK(theme_value(r, ThemeLayer::country) == "FR");
  CHECK(theme_value(r, ThemeLayer::period) == "1860s");
  r.denomination_year.reset();
  CHECK(theme_value(r, ThemeLayer::period) == "unknown");
  CHECK(is_theme_value(ThemeLayer::period, "1850s"));
  CHECK_FALSE(is_theme_value(ThemeLayer::period, "1853s"));
  CHECK_FALSE(is_theme_value(ThemeLayer::occupation, "color"));
  CHECK(is_theme_value(ThemeLayer::country, "unknown"));
  CHECK_FALSE(is_theme_value(ThemeLayer::country, "fr"));
}

TEST_CASE("default city configs are consistent") {
  CHECK(default_city_configs().size() == 4);
  for (const auto& c : default_city_configs()) CHECK(check_city_config(c).empty());
  CHECK(default_city_config(CityId::paris).year_range == YearRange{1202, 2011});
  CHECK(default_city_config(CityId::london).year_range == YearRange{1030, 2013});
  auto bad = default_city_config(CityId::vienna);
  bad.center = {0, 0};
  bad.year_range = {2000, 1000};
  CHECK(check_city_config(bad).size() == 2);
}

TEST_CASE("canonical CSV header") {
  auto text = write_records_csv({});
  CHECK(text == "record_id,streetname,district,denomination,honoree,gender,occupation,occupation_group,country,"
                "dob,dod,honoree_url,image_url,source,city\n");
}

TEST_CASE("canonical CSV rejects missing columns") {
  try {
    read_records_csv("record_id,streetname\nx,y\n");
    FAIL("expected SchemaMismatch");
  } catch (const SchemaMismatch& e) {
    CHECK(std::find(e.missing_columns.begin(), e.missing_columns.end(), "honoree") != e.missing_columns.end());
  }
}

TEST_CASE("property: canonical CSV round trip of valid records") {
  testing::Rng rng(5);
  std::vector<StreetRecord> records;
  for (int i = 0; i < 600; ++i) {
    auto r = testing::random_record(rng, all_values<CityId>()[static_cast<std::size_t>(i % 4)],
                                    "id-" + std::to_string(i));
    if (i % 7 == 0) r.street_name = "Rue \"des\", Fleurs\nbis";
    if (i % 11 == 0) r.honoree_name = " leading space";
    REQUIRE(validate_record(r, 2024).empty());
    records.push_back(r);
  }
  auto back = read_records_csv(write_records_csv(records));
  REQUIRE(back.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) CHECK(back[i] == records[i]);
}
