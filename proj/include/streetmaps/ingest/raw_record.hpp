// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streetmaps/domain/types.hpp"

namespace streetmaps::ingest {

/// A street as a source reported it, before normalization. Every attribute
/// is free text; absent means the source did not provide it.
struct RawRecord {
  std::optional<std::string> record_id;
  std::string street_name;
  std::optional<std::string> city;
  std::optional<std::string> district;
  std::optional<std::string> denomination;
  std::optional<std::string> honoree_name;
  std::optional<std::string> gender;
  std::optional<std::string> occupation_raw;
  std::optional<std::string> country;
  std::optional<std::string> birth;
  std::optional<std::string> death;
  std::optional<std::string> honoree_url;
  std::optional<std::string> image_url;

  Source source = Source::curated;
  std::string source_url;
  std::string retrieved_at;  // ISO 8601 UTC
  std::vector<std::string> warnings;

  /// Number of populated attribute fields (street_name and provenance excluded).
  int populated_fields() const;

  friend bool operator==(const RawRecord&, const RawRecord&) = default;
};

/// Produces retrieved_at stamps. Injected so adapters stay deterministic
/// under test and in pinned pipeline runs.
using Clock = std::function<std::string()>;

/// "YYYY-MM-DDTHH:MM:SSZ" from the system clock.
std::string utc_now_iso8601();

inline Clock system_clock() { return &utc_now_iso8601; }
inline Clock fixed_clock(std::string stamp) {
  return [s = std::move(stamp)] { return s; };
}

/// Treats empty or whitespace-only text as absent; otherwise trimmed text.
std::optional<std::string> present(std::string_view text);

/// Raw CSV: the canonical columns plus source_url, retrieved_at, warnings.
/// `occupation_group` is always empty in raw files.
std::string write_raw_csv(const std::vector<RawRecord>& records);
std::vector<RawRecord> read_raw_csv(std::string_view text);

}  // namespace streetmaps::ingest
