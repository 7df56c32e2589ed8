// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <atomic>
#include <csignal>
#include <iostream>
#include <thread>

#include "streetmaps/api/server.hpp"
#include "streetmaps/api/service.hpp"
#include "streetmaps/domain/errors.hpp"
#include "streetmaps/domain/record_csv.hpp"
#include "streetmaps/domain/validate.hpp"
#include "streetmaps/geomatch/geojson.hpp"
#include "streetmaps/geomatch/osm_extract.hpp"
#include "streetmaps/ingest/sources.hpp"
#include "streetmaps/normalize/clean.hpp"
#include "streetmaps/normalize/normalizers.hpp"
#include "streetmaps/pipeline/pipeline.hpp"
#include "streetmaps/pipeline/stages.hpp"
#include "streetmaps/store/database.hpp"
#include "streetmaps/util/files.hpp"

namespace sm = streetmaps;
namespace fs = std::filesystem;

namespace {

std::atomic<bool> g_reload{false};
std::atomic<bool> g_stop{false};

extern "C" void on_signal(int sig) {
  if (sig == SIGHUP)
    g_reload = true;
  else
    g_stop = true;
}

std::vector<std::string> city_ids() {
  std::vector<std::string> out;
  for (auto c : sm::all_values<sm::CityId>()) out.emplace_back(sm::to_string(c));
  return out;
}

sm::CityId city_of(const std::string& id) { return *sm::parse_enum<sm::CityId>(id); }

struct IngestArgs {
  std::string city, source, endpoint, entity, snapshot_time;
  fs::path in, out, cache_dir;
  bool translate = false;
  int min_delay_ms = 1000;
};

int cmd_ingest(const IngestArgs& a) {
  sm::ingest::SourceSpec spec;
  spec.city = city_of(a.city);
  if (a.source == "wikidata") {
    spec.kind = sm::Source::wikidata;
    if (a.endpoint.empty() && a.in.empty()) throw sm::Error("wikidata needs --endpoint or --in");
    spec.entity = a.entity;
  } else if (a.source == "wikihistory") {
    spec.kind = sm::Source::wikihistory;
  } else {
    spec.kind = sm::ingest::looks_annotated(a.in) ? sm::Source::annotated_csv : sm::Source::curated;
  }
  if (spec.kind != sm::Source::wikidata && a.in.empty()) throw sm::Error("--in is required for " + a.source);
  spec.endpoint = a.endpoint;
  spec.input = a.in;
  spec.translate = a.translate;
  spec.cache_dir = a.cache_dir;
  spec.min_delay = std::chrono::milliseconds(a.min_delay_ms);
  if (!a.snapshot_time.empty()) spec.clock = sm::ingest::fixed_clock(a.snapshot_time);

  auto result = sm::ingest::run_source(spec);
  sm::util::write_file_atomic(a.out, sm::ingest::write_raw_csv(result.records));
  for (const auto& n : result.notes) std::cerr << "note: " << n << "\n";
  std::cerr << "ingested " << result.records.size() << " record(s) into " << a.out.string() << "\n";
  return 0;
}

int cmd_normalize(const fs::path& in, const fs::path& out, const fs::path& report, int latest_year) {
  auto raw = sm::ingest::read_raw_csv(sm::util::read_file(in));
  auto result = sm::normalize::clean_dataset(raw, latest_year);
  sm::util::write_file_atomic(out, sm::write_records_csv(result.records));
  if (!report.empty()) sm::util::write_file_atomic(report, sm::normalize::write_report_csv(result.report));
  std::cerr << "kept " << result.records.size() << ", dropped "
            << result.report.count(sm::normalize::RejectionKind::dropped) << ", merged "
            << result.report.count(sm::normalize::RejectionKind::merged) << ", warnings "
            << result.report.warnings.size() << "\n";
  return 0;
}

int cmd_match(const fs::path& in, const fs::path& osm, const fs::path& out, const fs::path& unmatched, double radius) {
  auto records = sm::read_records_csv(sm::util::read_file(in));
  auto extract = sm::geomatch::parse_osm_extract(sm::util::read_file(osm));
  auto features = sm::pipeline::match_records(records, extract, {radius});
  sm::util::write_file_atomic(out, sm::geomatch::write_feature_collection(features));
  if (!unmatched.empty()) sm::util::write_file_atomic(unmatched, sm::pipeline::write_unmatched_csv(features));
  std::size_t misses = 0;
  for (const auto& f : features) misses += f.match_method == sm::geomatch::MatchMethod::unmatched;
  std::cerr << "matched " << features.size() - misses << " of " << features.size() << "\n";
  return 0;
}

int cmd_serve(const fs::path& db, const std::string& host, int port, const fs::path& config_file) {
  auto config = config_file.empty() ? sm::api::ServiceConfig{} : sm::api::load_service_config(config_file);
  sm::store::SnapshotStore snapshots;
  snapshots.replace(sm::store::open_database(db));
  sm::api::Service service(config, snapshots);
  sm::api::HttpServer server(service);
  int bound = server.bind(host, port);

  std::signal(SIGHUP, on_signal);
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::thread watcher([&] {
    while (!g_stop) {
      if (g_reload.exchange(false)) {
        try {
          snapshots.replace(sm::store::open_database(db));
          std::cerr << "reloaded " << snapshots.current()->size() << " features\n";
        } catch (const std::exception& e) {
          std::cerr << "reload failed, keeping current snapshot: " << e.what() << "\n";
        }
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
    }
    server.stop();
  });
  std::cerr << "serving " << snapshots.current()->size() << " features on " << host << ":" << bound << "\n";
  server.run();
  g_stop = true;
  watcher.join();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Honorific street-name maps: ingest, normalize, match, load and serve"};
  app.require_subcommand(1);
  auto cities = city_ids();

  IngestArgs ingest;
  auto* c_ingest = app.add_subcommand("ingest", "Fetch or import one source into a raw CSV");
  c_ingest->add_option("--city", ingest.city)->required()->check(CLI::IsMember(cities));
  c_ingest->add_option("--source", ingest.source)->required()->check(CLI::IsMember({"wikidata", "wikihistory", "csv"}));
  c_ingest->add_option("--endpoint", ingest.endpoint, "SPARQL endpoint URL");
  c_ingest->add_option("--entity", ingest.entity, "Knowledge-base id of the city (wikidata)");
  c_ingest->add_option("--in", ingest.in, "Saved SPARQL JSON, page directory, URL list or CSV");
  c_ingest->add_option("--out", ingest.out)->required();
  c_ingest->add_flag("--translate", ingest.translate, "Translate German field values to English");
  c_ingest->add_option("--cache", ingest.cache_dir, "Page cache directory (wikihistory)");
  c_ingest->add_option("--min-delay-ms", ingest.min_delay_ms, "Delay between page requests");
  c_ingest->add_option("--snapshot-time", ingest.snapshot_time, "Fixed retrieved_at stamp");

  fs::path n_in, n_out, n_report;
  int latest_year = sm::current_year();
  auto* c_normalize = app.add_subcommand("normalize", "Clean raw records into the canonical CSV");
  c_normalize->add_option("--in", n_in)->required();
  c_normalize->add_option("--out", n_out)->required();
  c_normalize->add_option("--report", n_report, "Rejections and warnings CSV");
  c_normalize->add_option("--latest-year", latest_year, "Latest acceptable denomination year");

  fs::path m_in, m_osm, m_out, m_unmatched;
  double radius = 2000.0;
  auto* c_match = app.add_subcommand("match", "Join canonical records with OSM way geometry");
  c_match->add_option("--in", m_in)->required();
  c_match->add_option("--osm", m_osm, "GeoJSON extract of named ways")->required();
  c_match->add_option("--out", m_out)->required();
  c_match->add_option("--unmatched", m_unmatched, "Unmatched records CSV");
  c_match->add_option("--merge-radius", radius, "Metres within which same-name ways merge");

  fs::path l_in, db;
  auto* c_load = app.add_subcommand("load", "Validate features and replace the snapshot database");
  c_load->add_option("--in", l_in)->required();
  c_load->add_option("--db", db)->required();

  fs::path e_out;
  std::string e_city;
  auto* c_export = app.add_subcommand("export", "Write snapshot features as canonical CSV or GeoJSON");
  c_export->add_option("--db", db)->required();
  c_export->add_option("--city", e_city)->check(CLI::IsMember(cities));
  c_export->add_option("--out", e_out, ".csv, .geojson or .json")->required();

  std::string host = "127.0.0.1";
  int port = 8080;
  fs::path serve_config;
  auto* c_serve = app.add_subcommand("serve", "Serve the snapshot over HTTP");
  c_serve->add_option("--db", db)->required();
  c_serve->add_option("--port", port)->check(CLI::Range(0, 65535));
  c_serve->add_option("--host", host);
  c_serve->add_option("--config", serve_config, "JSON: cities, cors_origins, static_dir");

  auto* c_pipeline = app.add_subcommand("pipeline", "Run every stage from one config");
  c_pipeline->require_subcommand(1);
  fs::path p_config;
  std::string p_city;
  auto* c_run = c_pipeline->add_subcommand("run", "Ingest, normalize, match and load");
  c_run->add_option("--config", p_config)->required();
  c_run->add_option("--city", p_city)->check(CLI::IsMember(cities));
  fs::path p_out;
  c_run->add_option("--out", p_out, "Output directory (overrides output_dir)");

  fs::path k_in;
  auto* c_lint = app.add_subcommand("lint-keywords", "Check an occupation keyword table");
  c_lint->add_option("--in", k_in)->required();

  CLI11_PARSE(app, argc, argv);

  std::string stage;
  try {
    if (*c_ingest) {
      stage = "ingest";
      return cmd_ingest(ingest);
    }
    if (*c_normalize) {
      stage = "normalize";
      return cmd_normalize(n_in, n_out, n_report, latest_year);
    }
    if (*c_match) {
      stage = "match";
      return cmd_match(m_in, m_osm, m_out, m_unmatched, radius);
    }
    if (*c_load) {
      stage = "load";
      auto snapshot = sm::store::save_database(db, sm::util::read_file(l_in));
      std::cerr << "loaded " << snapshot->size() << " features into " << db.string() << "\n";
      return 0;
    }
    if (*c_export) {
      stage = "export";
      auto format = sm::store::export_format_for(e_out);
      if (!format) throw sm::Error("cannot tell the export format from " + e_out.string());
      auto snapshot = sm::store::open_database(db);
      std::optional<sm::CityId> city;
      if (!e_city.empty()) city = city_of(e_city);
      sm::util::write_file_atomic(e_out, sm::store::export_features(*snapshot, city, *format));
      return 0;
    }
    if (*c_serve) {
      stage = "serve";
      return cmd_serve(db, host, port, serve_config);
    }
    if (*c_run) {
      stage = "pipeline";
      auto config = sm::pipeline::load_pipeline_config(p_config);
      if (!p_out.empty()) config.output_dir = p_out;
      std::optional<sm::CityId> city;
      if (!p_city.empty()) city = city_of(p_city);
      auto summary = sm::pipeline::run_pipeline(config, city);
      std::cout << sm::pipeline::summary_table(summary);
      return summary.ok() ? 0 : 1;
    }
    if (*c_lint) {
      stage = "lint-keywords";
      auto problems = sm::normalize::lint_keyword_table(sm::util::read_file(k_in));
      for (const auto& p : problems) std::cout << p << "\n";
      return problems.empty() ? 0 : 1;
    }
  } catch (const sm::InvalidSnapshot& e) {
    std::cerr << "streetmaps: " << stage << ": " << e.what() << "\n";
    for (const auto& d : e.diagnostics) std::cerr << "  " << d << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "streetmaps: " << stage << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
