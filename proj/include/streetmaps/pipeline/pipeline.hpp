// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "streetmaps/domain/types.hpp"
#include "streetmaps/ingest/http.hpp"

namespace streetmaps::pipeline {

namespace fs = std::filesystem;

struct SourceConfig {
  Source kind = Source::curated;
  std::string endpoint;
  fs::path input;
  /// `input` as written in the config; recorded as provenance.
  std::string input_label;
  std::string entity;
  bool translate = false;
  fs::path cache_dir;
};

struct CityRun {
  CityId city = CityId::paris;
  std::vector<SourceConfig> sources;
  fs::path osm_extract;
};

struct PipelineConfig {
  fs::path output_dir;
  /// Pins retrieved_at; required for byte-identical reruns.
  std::optional<std::string> snapshot_time;
  /// Latest acceptable denomination year; defaults to the current year.
  std::optional<int> latest_year;
  double merge_radius_m = 2000.0;
  std::chrono::milliseconds min_delay{1000};
  ingest::RetryPolicy retry;
  std::vector<CityRun> cities;
};

/// JSON config; relative paths resolve against `base_dir`. Throws Error.
PipelineConfig parse_pipeline_config(std::string_view json_text, const fs::path& base_dir);
PipelineConfig load_pipeline_config(const fs::path& file);

struct CitySummary {
  CityId city = CityId::paris;
  std::size_t ingested = 0;
  std::size_t cleaned = 0;
  std::size_t dropped = 0;
  std::size_t merged = 0;
  std::size_t matched_exact = 0;
  std::size_t matched_normalized = 0;
  std::size_t unmatched = 0;
  std::optional<int> min_year;
  std::optional<int> max_year;
  std::vector<std::string> notes;
  /// Set when a stage failed; later stages did not run.
  std::optional<std::string> failed_stage;
  std::string error;

  std::size_t rejected() const { return dropped + merged; }
  std::size_t matched() const { return matched_exact + matched_normalized; }
};

struct PipelineSummary {
  std::vector<CitySummary> cities;
  bool loaded = false;
  std::size_t snapshot_features = 0;
  std::optional<std::string> load_error;

  bool ok() const;
};

/// Runs ingest, normalize, match per city (cities concurrently), then loads
/// all cities into <output_dir>/db. Each stage reads the previous stage's
/// file. A failing city keeps its partial outputs; the load stage only runs
/// when every city succeeded. Never throws for stage failures.
PipelineSummary run_pipeline(const PipelineConfig& config, std::optional<CityId> only_city = std::nullopt);

std::string summary_table(const PipelineSummary& summary);
nlohmann::ordered_json summary_json(const PipelineSummary& summary);

}  // namespace streetmaps::pipeline
