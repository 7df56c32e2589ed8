// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <set>

#include "streetmaps/domain/countries.hpp"
#include "streetmaps/domain/validate.hpp"
#include "streetmaps/ingest/sources.hpp"
#include "streetmaps/normalize/clean.hpp"
#include "streetmaps/normalize/normalizers.hpp"
#include "streetmaps/util/csv.hpp"
#include "streetmaps/util/files.hpp"
#include "support.hpp"

using namespace streetmaps;
using namespace streetmaps::normalize;
using ingest::RawRecord;

namespace {

RawRecord raw(const std::string& street, std::optional<std::string> honoree) {
  RawRecord r;
  r.street_name = street;
  r.city = "paris";
  r.honoree_name = std::move(honoree);
  r.source = Source::curated;
  r.source_url = "mem";
  r.retrieved_at = "2024-01-01T00:00:00Z";
  return r;
}

std::vector<RawRecord> fixture_corpus() {
  std::vector<RawRecord> all;
  auto add = [&](CityId city, Source kind, const char* rel, bool translate) {
    ingest::SourceSpec s;
    s.city = city;
    s.kind = kind;
    s.input = testing::fixtures_dir() / rel;
    s.translate = translate;
    s.clock = ingest::fixed_clock("2024-05-01T00:00:00Z");
    auto r = ingest::run_source(s).records;
    all.insert(all.end(), r.begin(), r.end());
  };
  add(CityId::paris, Source::wikidata, "paris/wikidata/streets.sparql.json", false);
  add(CityId::vienna, Source::wikihistory, "vienna/wikihistory/pages", true);
  add(CityId::london, Source::annotated_csv, "london/annotated_csv/annotations.csv", false);
  add(CityId::newyork, Source::curated, "newyork/curated/streets.csv", false);
  return all;
}

}  // namespace

TEST_CASE("occupation mapping examples") {
  CHECK(map_occupation("composer") == OccupationGroup::creative_performing_artists);
  CHECK(map_occupation("  Composer ") == OccupationGroup::creative_performing_artists);
  CHECK(map_occupation("poet") == OccupationGroup::writers);
  CHECK(map_occupation("physicist") == OccupationGroup::science_engineering_professionals);
  CHECK(map_occupation("") == OccupationGroup::other);
  CHECK(map_occupation("zzzz") == OccupationGroup::other);
  CHECK(map_occupation("writers") == OccupationGroup::writers);
}

TEST_CASE("occupation golden file") {
  util::CsvTable table(util::read_file(testing::test_data_dir() / "occupation_golden.csv"));
  REQUIRE(table.rows().size() >= 100);
  std::set<std::string> groups_seen;
  for (std::size_t i = 0; i < table.rows().size(); ++i) {
    const auto& occupation = table.cell(i, "occupation");
    const auto& expected = table.cell(i, "group");
    CAPTURE(occupation);
    CHECK(to_string(map_occupation(occupation)) == expected);
    groups_seen.insert(std::string(expected));
  }
  CHECK(groups_seen.size() == enum_count<OccupationGroup>());
}

TEST_CASE("bundled keyword table lints clean") {
  auto csv = util::read_file(testing::fixtures_dir().parent_path() / "data" / "occupation_keywords_v1.csv");
  CHECK(lint_keyword_table(csv).empty());
  CHECK_FALSE(occupation_keywords().empty());
  CHECK(lint_keyword_table("keyword,group\npoet,writers\npoet,writers\n").size() == 1);
  CHECK(lint_keyword_table("keyword,group\nPoet,writers\n").size() == 1);
  CHECK(lint_keyword_table("keyword,group\npoet,bards\n").size() == 1);
}

TEST_CASE("occupation mapping is total over the fixture corpus") {
  for (const auto& r : fixture_corpus()) {
    auto g = map_occupation(r.occupation_raw.value_or(""));
    CHECK(static_cast<std::size_t>(g) < enum_count<OccupationGroup>());
  }
}

TEST_CASE("property: occupation mapping is idempotent on group names") {
  testing::Rng rng(9);
  const std::vector<std::string> words{"poet", "nurse", "of", "and", "king", "painter", "the", "engineer", "x"};
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (int k = rng.between(0, 4); k > 0; --k) s += rng.pick(words) + " ";
    auto g = map_occupation(s);
    CHECK(map_occupation(to_string(g)) == g);
  }
}

TEST_CASE("gender normalization") {
  CHECK(normalize_gender("female") == Gender::female);
  CHECK(normalize_gender("F") == Gender::female);
  CHECK(normalize_gender("weiblich") == Gender::female);
  CHECK(normalize_gender("femme") == Gender::female);
  CHECK(normalize_gender("Männlich") == Gender::male);
  CHECK(normalize_gender("homme") == Gender::male);
  CHECK(normalize_gender("") == Gender::unknown);
  CHECK(normalize_gender("?") == Gender::unknown);
  for (auto g : all_values<Gender>()) CHECK(normalize_gender(to_string(g)) == g);
}

TEST_CASE("country normalization") {
  CHECK(normalize_country("France").str() == "FR");
  CHECK(normalize_country("FR").str() == "FR");
  CHECK(normalize_country("United States").str() == "US");
  CHECK(normalize_country("Preußen").str() == "DE");
  CHECK(normalize_country("Heiliges Römisches Reich").str() == "AT");
  CHECK(normalize_country("Atlantis").str() == "unknown");
  CHECK(normalize_country("").str() == "unknown");
  for (const auto& c : iso_countries()) CHECK(normalize_country(c.code).str() == c.code);
}

TEST_CASE("year parsing") {
  CHECK(parse_year("1867").year == 1867);
  CHECK(parse_year("1030-06-01").year == 1030);
  CHECK(parse_year("1756-01-27T00:00:00Z").year == 1756);
  CHECK(parse_year("27.01.1756").year == 1756);
  CHECK(parse_year("27. Jänner 1756").year == 1756);
  CHECK(parse_year("January 27, 1756").year == 1756);
  auto short_year = parse_year("53");
  CHECK_FALSE(short_year.year.has_value());
  CHECK(short_year.warning.has_value());
  CHECK_FALSE(parse_year("2150").year.has_value());
  auto blank = parse_year("  ");
  CHECK_FALSE(blank.year.has_value());
  CHECK_FALSE(blank.warning.has_value());
}

TEST_CASE("property: year parsing is idempotent on its output") {
  testing::Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    int y = rng.between(900, 2200);
    auto p = parse_year(std::to_string(y) + "-0" + std::to_string(rng.between(1, 9)) + "-1" +
                        std::to_string(rng.between(0, 9)));
    if (y < kMinParsedYear || y > kMaxParsedYear) {
      CHECK_FALSE(p.year.has_value());
    } else {
      REQUIRE(p.year == y);
      CHECK(parse_year(std::to_string(*p.year)).year == p.year);
    }
  }
}

TEST_CASE("clean: 12 raw with 2 missing honorees and 1 duplicate") {
  std::vector<RawRecord> in;
  for (int i = 0; i < 10; ++i) in.push_back(raw("Rue " + std::to_string(i), "Person " + std::to_string(i)));
  in.push_back(raw("Rue 11", std::nullopt));
  in.push_back(raw("Rue 12", "  "));
  in[3].street_name = "Rue 2";  // duplicates Rue 2
  auto out = clean_dataset(in, 2024);
  CHECK(out.records.size() == 9);
  CHECK(out.report.rejections.size() == 3);
  CHECK(out.report.count(RejectionKind::dropped) == 2);
  CHECK(out.report.count(RejectionKind::merged) == 1);
  for (const auto& r : out.records) CHECK(validate_record(r, 2024).empty());
}

TEST_CASE("clean: valid input passes unchanged in size and order") {
  std::vector<RawRecord> in;
  for (int i = 0; i < 10; ++i) in.push_back(raw("Rue " + std::to_string(i), "P" + std::to_string(i)));
  auto out = clean_dataset(in, 2024);
  REQUIRE(out.records.size() == 10);
  for (int i = 0; i < 10; ++i) CHECK(out.records[static_cast<std::size_t>(i)].street_name == in[static_cast<std::size_t>(i)].street_name);
  CHECK(out.report.rejections.empty());
}

TEST_CASE("clean: the richer duplicate is kept") {
  auto poor = raw("Rue Molière", "Molière");
  auto rich = raw("rue molière", "Molière");
  rich.occupation_raw = "playwright";
  rich.gender = "male";
  auto out = clean_dataset({poor, rich}, 2024);
  REQUIRE(out.records.size() == 1);
  CHECK(out.records[0].occupation_group == OccupationGroup::writers);
  CHECK(out.records[0].gender == Gender::male);
}

TEST_CASE("clean: hard invariants") {
  auto born_late = raw("Rue A", "A");
  born_late.birth = "1900";
  born_late.death = "1850";
  auto no_city = raw("Rue B", "B");
  no_city.city = "atlantis";
  auto no_name = raw("  ", "C");
  auto out = clean_dataset({born_late, no_city, no_name}, 2024);
  CHECK(out.records.empty());
  CHECK(out.report.count(RejectionKind::dropped) == 3);

  auto future = raw("Rue D", "D");
  future.denomination = "2031";
  auto kept = clean_dataset({future}, 2024);
  CHECK(kept.records.size() + kept.report.rejections.size() == 1);
  for (const auto& r : kept.records) CHECK(validate_record(r, 2024).empty());
}

TEST_CASE("clean: derived ids are stable") {
  auto a = derived_record_id(CityId::paris, "Rue Molière");
  CHECK(a == derived_record_id(CityId::paris, "RUE MOLIÈRE"));
  CHECK(a.rfind("paris-", 0) == 0);
  CHECK(a.size() == 6 + 12);
  CHECK(parse_city_name("Wien") == CityId::vienna);
  CHECK(parse_city_name("New York") == CityId::newyork);
}

TEST_CASE("property: clean reconciles, validates and is idempotent") {
  testing::Rng rng(21);
  const std::vector<std::string> streets{"Rue A", "rue a", "Rue B", "Rue C", "Rue D", "  ", "Rue E"};
  const std::vector<std::string> years{"", "1850", "1900", "53", "2031", "1999-01-01"};
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<RawRecord> in;
    for (int k = rng.between(0, 12); k > 0; --k) {
      auto r = raw(rng.pick(streets), rng.chance(0.85) ? std::optional<std::string>("H") : std::nullopt);
      r.city = rng.pick(std::vector<std::string>{"paris", "london", "vienna", "nowhere"});
      if (rng.chance(0.5)) r.birth = rng.pick(years);
      if (rng.chance(0.5)) r.death = rng.pick(years);
      if (rng.chance(0.5)) r.denomination = rng.pick(years);
      if (rng.chance(0.3)) r.record_id = "id-" + std::to_string(rng.between(0, 5));
      in.push_back(r);
    }
    auto out = clean_dataset(in, 2024);
    CHECK(out.records.size() + out.report.rejections.size() == in.size());
    CHECK(validate_dataset(out.records, 2024).empty());
  }
}
