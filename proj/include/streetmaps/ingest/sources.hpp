// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "streetmaps/domain/types.hpp"
#include "streetmaps/ingest/http.hpp"
#include "streetmaps/ingest/raw_record.hpp"

namespace streetmaps::ingest {

/// One configured source for one city, as named on the command line or in a
/// pipeline config.
///
///  - wikidata:      `endpoint` (live SPARQL) or `input` (a saved results JSON)
///  - wikihistory:   `input` is a directory of saved pages, or a text file of
///                   page URLs (one per line) fetched through a Crawler
///  - annotated_csv: `input` with one row per (street, annotator)
///  - curated:       `input` with one row per street
struct SourceSpec {
  CityId city = CityId::paris;
  Source kind = Source::curated;
  std::string endpoint;
  std::filesystem::path input;
  std::string entity;
  /// Label recorded as provenance instead of the resolved file path.
  std::string input_label;
  bool translate = false;
  std::filesystem::path cache_dir;
  std::chrono::milliseconds min_delay{1000};
  RetryPolicy retry;
  Clock clock = system_clock();
};

struct IngestResult {
  std::vector<RawRecord> records;
  /// Pages that were not street pages, fields left for manual review, ...
  std::vector<std::string> notes;
};

/// Throws SourceUnavailable, MalformedResponse, SchemaMismatch, EmptyFile,
/// or IoError.
IngestResult run_source(const SourceSpec& spec);

/// True when the CSV header has an `annotator` column.
bool looks_annotated(const std::filesystem::path& csv);

}  // namespace streetmaps::ingest
