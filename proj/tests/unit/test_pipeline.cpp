// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include "streetmaps/domain/errors.hpp"
#include "streetmaps/domain/record_csv.hpp"
#include "streetmaps/pipeline/pipeline.hpp"
#include "streetmaps/store/database.hpp"
#include "streetmaps/util/csv.hpp"
#include "streetmaps/util/files.hpp"
#include "support.hpp"

using namespace streetmaps;
using namespace streetmaps::pipeline;
namespace fs = std::filesystem;

namespace {

PipelineConfig fixture_config(const std::string& name) {
  auto config = load_pipeline_config(testing::fixtures_dir() / "pipeline.json");
  config.output_dir = testing::scratch_dir(name);
  return config;
}

std::size_t csv_rows(const fs::path& file) { return util::CsvTable(util::read_file(file)).rows().size(); }

std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file()) out[fs::relative(e.path(), root).generic_string()] = util::read_file(e.path());
  return out;
}

int run_cli(const std::string& args, const fs::path& log) {
  auto cmd = std::string(STREETMAPS_CLI) + " " + args + " > '" + log.string() + "' 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("pipeline over the fixtures: every city loads and counts reconcile") {
  auto config = fixture_config("pipe-all");
  auto summary = run_pipeline(config);
  CAPTURE(summary_table(summary));
  REQUIRE(summary.ok());
  REQUIRE(summary.cities.size() == 4);
  std::size_t features = 0;
  for (const auto& c : summary.cities) {
    auto dir = config.output_dir / std::string(to_string(c.city));
    CHECK(c.matched() > 0);
    CHECK(c.ingested == c.cleaned + c.rejected());
    CHECK(c.cleaned == c.matched() + c.unmatched);
    CHECK(csv_rows(dir / "raw.csv") == c.ingested);
    CHECK(csv_rows(dir / "records.csv") == c.cleaned);
    CHECK(csv_rows(dir / "unmatched.csv") == c.unmatched);
    features += c.cleaned;
  }
  CHECK(summary.snapshot_features == features);
  CHECK(store::open_database(config.output_dir / "db")->size() == features);

  auto js = summary_json(summary);
  CHECK(js["ok"] == true);
  CHECK(js["snapshot_features"] == features);
  CHECK(nlohmann::json::parse(util::read_file(config.output_dir / "summary.json")) == nlohmann::json::parse(js.dump()));
}

TEST_CASE("pipeline over the fixtures: expected per-city outcomes") {
  auto summary = run_pipeline(fixture_config("pipe-counts"));
  std::map<CityId, CitySummary> by_city;
  for (const auto& c : summary.cities) by_city[c.city] = c;
  CHECK(by_city[CityId::paris].ingested == 25);
  CHECK(by_city[CityId::paris].unmatched == 1);
  CHECK(by_city[CityId::vienna].matched_normalized == 2);
  CHECK(by_city[CityId::london].rejected() == 0);
  CHECK(by_city[CityId::newyork].rejected() == 2);
  CHECK(summary.snapshot_features == 77);
}

TEST_CASE("pipeline reruns are byte-identical") {
  auto a = fixture_config("pipe-rerun-a");
  auto b = fixture_config("pipe-rerun-b");
  REQUIRE(run_pipeline(a).ok());
  REQUIRE(run_pipeline(b).ok());
  auto ta = tree(a.output_dir);
  auto tb = tree(b.output_dir);
  CHECK(ta.size() == tb.size());
  CHECK(ta == tb);
}

TEST_CASE("pipeline: one city only") {
  auto config = fixture_config("pipe-one");
  auto summary = run_pipeline(config, CityId::vienna);
  REQUIRE(summary.ok());
  REQUIRE(summary.cities.size() == 1);
  auto snap = store::open_database(config.output_dir / "db");
  CHECK(snap->count(CityId::vienna) == snap->size());
  CHECK_FALSE(fs::exists(config.output_dir / "paris"));
}

TEST_CASE("pipeline: an unreachable source fails in ingest and loads nothing") {
  auto dir = testing::scratch_dir("pipe-down");
  auto text = R"({"output_dir":"out","snapshot_time":"2024-05-01T00:00:00Z",
    "retry":{"attempts":2,"initial_backoff_ms":1,"multiplier":1},
    "cities":[{"city":"paris","osm":")" + (testing::fixtures_dir() / "paris/osm/extract.geojson").generic_string() +
              R"(","sources":[{"kind":"wikidata","endpoint":"http://127.0.0.1:9/sparql"}]}]})";
  util::write_file_atomic(dir / "pipeline.json", text);
  auto config = load_pipeline_config(dir / "pipeline.json");
  CHECK(config.output_dir == dir / "out");
  auto summary = run_pipeline(config);
  CHECK_FALSE(summary.ok());
  REQUIRE(summary.cities.size() == 1);
  CHECK(summary.cities[0].failed_stage == "ingest");
  CHECK_FALSE(summary.cities[0].error.empty());
  CHECK_FALSE(summary.loaded);
  CHECK_FALSE(fs::exists(config.output_dir / "db"));

  CHECK(run_cli("pipeline run --config " + q(dir / "pipeline.json"), dir / "log.txt") != 0);
  auto log = util::read_file(dir / "log.txt");
  CHECK(log.find("ingest") != std::string::npos);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_pipeline_config("{", "."), Error);
  CHECK_THROWS_AS(parse_pipeline_config(R"({"output_dir":"x","cities":[{"city":"rome","osm":"a","sources":[]}]})", "."),
                  Error);
  CHECK_THROWS_AS(
      parse_pipeline_config(R"({"output_dir":"x","cities":[{"city":"paris","osm":"a","sources":[{"kind":"fax"}]}]})", "."),
      Error);
}

TEST_CASE("cli: stage by stage matches the pipeline") {
  auto dir = testing::scratch_dir("cli-stages");
  auto fx = testing::fixtures_dir();
  auto log = dir / "log.txt";
  REQUIRE(run_cli("ingest --city paris --source wikidata --in " + q(fx / "paris/wikidata/streets.sparql.json") +
                      " --out " + q(dir / "raw.csv") + " --snapshot-time 2024-05-01T00:00:00Z",
                  log) == 0);
  REQUIRE(run_cli("normalize --in " + q(dir / "raw.csv") + " --out " + q(dir / "records.csv") + " --report " +
                      q(dir / "rejections.csv") + " --latest-year 2024",
                  log) == 0);
  REQUIRE(run_cli("match --in " + q(dir / "records.csv") + " --osm " + q(fx / "paris/osm/extract.geojson") + " --out " +
                      q(dir / "features.geojson") + " --unmatched " + q(dir / "unmatched.csv"),
                  log) == 0);
  REQUIRE(run_cli("load --in " + q(dir / "features.geojson") + " --db " + q(dir / "db"), log) == 0);
  REQUIRE(run_cli("export --db " + q(dir / "db") + " --city paris --out " + q(dir / "export.csv"), log) == 0);

  auto config = fixture_config("cli-stages-pipe");
  REQUIRE(run_pipeline(config, CityId::paris).ok());
  for (const char* f : {"records.csv", "rejections.csv", "features.geojson", "unmatched.csv"}) {
    CAPTURE(f);
    CHECK(util::read_file(dir / f) == util::read_file(config.output_dir / "paris" / f));
  }
  auto exported = read_records_csv(util::read_file(dir / "export.csv"));
  auto cleaned = read_records_csv(util::read_file(dir / "records.csv"));
  std::sort(cleaned.begin(), cleaned.end(), [](const auto& a, const auto& b) { return a.record_id < b.record_id; });
  CHECK(exported == cleaned);

  CHECK(run_cli("load --in " + q(fx / "pipeline.json") + " --db " + q(dir / "db2"), log) != 0);
  CHECK(run_cli("normalize --in " + q(dir / "missing.csv") + " --out " + q(dir / "x.csv"), log) != 0);
  CHECK(util::read_file(log).find("normalize") != std::string::npos);
}

TEST_CASE("cli: keyword lint") {
  auto dir = testing::scratch_dir("cli-lint");
  CHECK(run_cli("lint-keywords --in " + q(testing::fixtures_dir().parent_path() / "data/occupation_keywords_v1.csv"),
                dir / "log.txt") == 0);
  util::write_file_atomic(dir / "bad.csv", "keyword,group\npoet,writers\npoet,writers\n");
  CHECK(run_cli("lint-keywords --in " + q(dir / "bad.csv"), dir / "log.txt") != 0);
}
