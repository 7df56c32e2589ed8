// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/pipeline/pipeline.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>

#include "streetmaps/domain/errors.hpp"
#include "streetmaps/domain/record_csv.hpp"
#include "streetmaps/domain/validate.hpp"
#include "streetmaps/geomatch/geojson.hpp"
#include "streetmaps/geomatch/osm_extract.hpp"
#include "streetmaps/ingest/sources.hpp"
#include "streetmaps/normalize/clean.hpp"
#include "streetmaps/pipeline/stages.hpp"
#include "streetmaps/store/database.hpp"
#include "streetmaps/util/files.hpp"

namespace streetmaps::pipeline {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_relative() ? base / path : path;
}

std::string required_string(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_string()) throw Error(where + ": '" + key + "' must be a string");
  return obj[key].get<std::string>();
}

SourceConfig parse_source(const json& j, const fs::path& base, const std::string& where) {
  if (!j.is_object()) throw Error(where + ": source must be an object");
  SourceConfig s;
  auto kind = required_string(j, "kind", where);
  if (kind == "csv") {
    s.kind = Source::curated;  // refined from the header when the run starts
  } else if (auto k = parse_enum<Source>(kind)) {
    s.kind = *k;
  } else {
    throw Error(where + ": unknown source kind '" + kind + "'");
  }
  if (j.contains("endpoint")) s.endpoint = required_string(j, "endpoint", where);
  if (j.contains("input")) {
    s.input_label = required_string(j, "input", where);
    s.input = resolve(base, s.input_label);
  }
  if (s.endpoint.empty() && s.input.empty()) throw Error(where + ": source needs 'endpoint' or 'input'");
  if (j.contains("entity")) s.entity = required_string(j, "entity", where);
  if (j.contains("translate")) s.translate = j["translate"].get<bool>();
  if (j.contains("cache_dir")) s.cache_dir = resolve(base, required_string(j, "cache_dir", where));
  return s;
}

std::string stage_file(const PipelineConfig& config, CityId city, const char* name) {
  return (config.output_dir / std::string(to_string(city)) / name).string();
}

void run_city(const PipelineConfig& config, const CityRun& run, CitySummary& summary) {
  auto clock = config.snapshot_time ? ingest::fixed_clock(*config.snapshot_time) : ingest::system_clock();
  const auto raw_path = stage_file(config, run.city, "raw.csv");
  const auto records_path = stage_file(config, run.city, "records.csv");
  const auto features_path = stage_file(config, run.city, "features.geojson");

  std::string stage = "ingest";
  try {
    std::vector<ingest::RawRecord> raw;
    for (const auto& src : run.sources) {
      ingest::SourceSpec spec;
      spec.city = run.city;
      spec.kind = src.kind;
      if (src.kind == Source::curated && !src.input.empty() && ingest::looks_annotated(src.input))
        spec.kind = Source::annotated_csv;
      spec.endpoint = src.endpoint;
      spec.input = src.input;
      spec.input_label = src.input_label;
      spec.entity = src.entity;
      spec.translate = src.translate;
      spec.cache_dir = src.cache_dir;
      spec.min_delay = config.min_delay;
      spec.retry = config.retry;
      spec.clock = clock;
      auto result = ingest::run_source(spec);
      raw.insert(raw.end(), result.records.begin(), result.records.end());
      summary.notes.insert(summary.notes.end(), result.notes.begin(), result.notes.end());
    }
    util::write_file_atomic(raw_path, ingest::write_raw_csv(raw));

    stage = "normalize";
    auto ingested = ingest::read_raw_csv(util::read_file(raw_path));
    summary.ingested = ingested.size();
    auto cleaned = normalize::clean_dataset(ingested, config.latest_year.value_or(current_year()));
    util::write_file_atomic(records_path, write_records_csv(cleaned.records));
    util::write_file_atomic(stage_file(config, run.city, "rejections.csv"), normalize::write_report_csv(cleaned.report));
    summary.cleaned = cleaned.records.size();
    summary.dropped = cleaned.report.count(normalize::RejectionKind::dropped);
    summary.merged = cleaned.report.count(normalize::RejectionKind::merged);
    for (const auto& r : cleaned.records) {
      if (!r.denomination_year) continue;
      summary.min_year = std::min(summary.min_year.value_or(*r.denomination_year), *r.denomination_year);
      summary.max_year = std::max(summary.max_year.value_or(*r.denomination_year), *r.denomination_year);
    }

    stage = "match";
    auto records = read_records_csv(util::read_file(records_path));
    auto extract = geomatch::parse_osm_extract(util::read_file(run.osm_extract));
    auto features = match_records(records, extract, {config.merge_radius_m});
    util::write_file_atomic(features_path, geomatch::write_feature_collection(features));
    util::write_file_atomic(stage_file(config, run.city, "unmatched.csv"), write_unmatched_csv(features));
    for (const auto& f : features) {
      switch (f.match_method) {
        case geomatch::MatchMethod::exact: ++summary.matched_exact; break;
        case geomatch::MatchMethod::normalized: ++summary.matched_normalized; break;
        case geomatch::MatchMethod::unmatched: ++summary.unmatched; break;
      }
    }

    stage = "reconcile";
    if (summary.ingested != summary.cleaned + summary.rejected())
      throw Error("ingested " + std::to_string(summary.ingested) + " != cleaned " + std::to_string(summary.cleaned) +
                  " + rejected " + std::to_string(summary.rejected()));
    if (summary.cleaned != summary.matched() + summary.unmatched)
      throw Error("cleaned " + std::to_string(summary.cleaned) + " != matched " + std::to_string(summary.matched()) +
                  " + unmatched " + std::to_string(summary.unmatched));
  } catch (const std::exception& e) {
    summary.failed_stage = stage;
    summary.error = e.what();
  }
}

std::string year_text(const std::optional<int>& y) { return y ? std::to_string(*y) : "-"; }

}  // namespace

PipelineConfig parse_pipeline_config(std::string_view json_text, const fs::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("pipeline config is not JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("pipeline config must be a JSON object");
  PipelineConfig config;
  try {
    config.output_dir = resolve(base_dir, doc.value("output_dir", std::string("out")));
    if (doc.contains("snapshot_time")) config.snapshot_time = required_string(doc, "snapshot_time", "config");
    if (doc.contains("latest_year")) config.latest_year = doc["latest_year"].get<int>();
    config.merge_radius_m = doc.value("merge_radius_m", config.merge_radius_m);
    config.min_delay = std::chrono::milliseconds(doc.value("min_delay_ms", 1000));
    if (doc.contains("retry")) {
      const auto& r = doc["retry"];
      config.retry.attempts = r.value("attempts", config.retry.attempts);
      config.retry.initial_backoff = std::chrono::milliseconds(r.value("initial_backoff_ms", 500));
      config.retry.multiplier = r.value("multiplier", config.retry.multiplier);
    }
  } catch (const json::type_error& e) {
    throw Error(std::string("pipeline config: ") + e.what());
  }
  if (!doc.contains("cities") || !doc["cities"].is_array()) throw Error("pipeline config: 'cities' must be an array");
  for (const auto& c : doc["cities"]) {
    auto id_text = required_string(c, "city", "cities[]");
    auto id = parse_enum<CityId>(id_text);
    if (!id) throw UnknownCity("pipeline config: unknown city '" + id_text + "'");
    std::string where = "city " + id_text;
    CityRun run;
    run.city = *id;
    run.osm_extract = resolve(base_dir, required_string(c, "osm", where));
    if (!c.contains("sources") || !c["sources"].is_array() || c["sources"].empty())
      throw Error(where + ": 'sources' must be a non-empty array");
    try {
      for (const auto& s : c["sources"]) run.sources.push_back(parse_source(s, base_dir, where));
    } catch (const json::type_error& e) {
      throw Error(where + ": " + e.what());
    }
    config.cities.push_back(std::move(run));
  }
  return config;
}

PipelineConfig load_pipeline_config(const fs::path& file) {
  return parse_pipeline_config(util::read_file(file), file.parent_path());
}

bool PipelineSummary::ok() const {
  if (load_error || !loaded) return false;
  return std::none_of(cities.begin(), cities.end(), [](const CitySummary& c) { return c.failed_stage.has_value(); });
}

PipelineSummary run_pipeline(const PipelineConfig& config, std::optional<CityId> only_city) {
  std::vector<const CityRun*> runs;
  for (const auto& run : config.cities)
    if (!only_city || run.city == *only_city) runs.push_back(&run);

  PipelineSummary summary;
  summary.cities.resize(runs.size());
  std::vector<std::future<void>> jobs;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    summary.cities[i].city = runs[i]->city;
    jobs.push_back(std::async(std::launch::async, [&, i] { run_city(config, *runs[i], summary.cities[i]); }));
  }
  for (auto& j : jobs) j.get();

  bool failed = std::any_of(summary.cities.begin(), summary.cities.end(),
                            [](const CitySummary& c) { return c.failed_stage.has_value(); });
  if (!failed && !runs.empty()) {
    try {
      std::vector<geomatch::StreetFeature> all;
      for (const auto* run : runs) {
        auto snap = store::Snapshot::load(util::read_file(stage_file(config, run->city, "features.geojson")));
        all.insert(all.end(), snap->features().begin(), snap->features().end());
      }
      std::sort(all.begin(), all.end(),
                [](const auto& a, const auto& b) { return a.record.record_id < b.record.record_id; });
      auto combined = geomatch::write_feature_collection(all);
      util::write_file_atomic(config.output_dir / "features.geojson", combined);
      auto snapshot = store::save_database(config.output_dir / "db", combined);
      summary.loaded = true;
      summary.snapshot_features = snapshot->size();
    } catch (const InvalidSnapshot& e) {
      std::string detail = e.what();
      for (std::size_t i = 0; i < e.diagnostics.size() && i < 5; ++i) detail += "; " + e.diagnostics[i];
      summary.load_error = "load: " + detail;
    } catch (const std::exception& e) {
      summary.load_error = std::string("load: ") + e.what();
    }
  } else if (runs.empty()) {
    summary.load_error = "load: no city to process";
  }

  util::write_file_atomic(config.output_dir / "summary.json", summary_json(summary).dump(2) + "\n");
  return summary;
}

std::string summary_table(const PipelineSummary& summary) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"city", "ingested", "cleaned", "rejected", "matched", "exact", "normalized", "unmatched",
                  "match_rate", "years", "status"});
  for (const auto& c : summary.cities) {
    std::ostringstream rate;
    if (c.cleaned)
      rate << std::fixed << std::setprecision(1) << 100.0 * static_cast<double>(c.matched()) / c.cleaned << "%";
    else
      rate << "-";
    rows.push_back({std::string(to_string(c.city)), std::to_string(c.ingested), std::to_string(c.cleaned),
                    std::to_string(c.rejected()), std::to_string(c.matched()), std::to_string(c.matched_exact),
                    std::to_string(c.matched_normalized), std::to_string(c.unmatched), rate.str(),
                    year_text(c.min_year) + "-" + year_text(c.max_year),
                    c.failed_stage ? "failed at " + *c.failed_stage : "ok"});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());

  std::ostringstream out;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      bool numeric = i > 0 && i < 9;
      out << (i ? "  " : "") << (numeric ? std::right : std::left) << std::setw(static_cast<int>(width[i])) << r[i];
    }
    out << "\n";
  }
  for (const auto& c : summary.cities)
    if (c.failed_stage) out << to_string(c.city) << ": " << c.error << "\n";
  if (summary.load_error) out << *summary.load_error << "\n";
  if (summary.loaded) out << "snapshot: " << summary.snapshot_features << " features\n";
  return out.str();
}

ordered_json summary_json(const PipelineSummary& summary) {
  ordered_json out;
  out["ok"] = summary.ok();
  auto cities = ordered_json::array();
  for (const auto& c : summary.cities) {
    ordered_json j;
    j["city"] = to_string(c.city);
    j["status"] = c.failed_stage ? "failed" : "ok";
    j["failed_stage"] = c.failed_stage ? ordered_json(*c.failed_stage) : ordered_json(nullptr);
    j["error"] = c.failed_stage ? ordered_json(c.error) : ordered_json(nullptr);
    j["ingested"] = c.ingested;
    j["cleaned"] = c.cleaned;
    j["rejected"] = {{"dropped", c.dropped}, {"merged", c.merged}};
    j["matched"] = {{"exact", c.matched_exact}, {"normalized", c.matched_normalized}};
    j["unmatched"] = c.unmatched;
    j["match_rate"] = c.cleaned ? static_cast<double>(c.matched()) / c.cleaned : 0.0;
    j["year_range"] = ordered_json::array({c.min_year ? ordered_json(*c.min_year) : ordered_json(nullptr),
                                           c.max_year ? ordered_json(*c.max_year) : ordered_json(nullptr)});
    j["notes"] = c.notes;
    cities.push_back(std::move(j));
  }
  out["cities"] = std::move(cities);
  out["snapshot_features"] = summary.snapshot_features;
  out["load_error"] = summary.load_error ? ordered_json(*summary.load_error) : ordered_json(nullptr);
  return out;
}

}  // namespace streetmaps::pipeline
