// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streetmaps/domain/types.hpp"
#include "streetmaps/ingest/raw_record.hpp"

namespace streetmaps::normalize {

enum class RejectionKind { dropped, merged };

struct Rejection {
  std::string record_ref;  // record_id when the source gave one, else source_url
  std::string city;
  std::string street_name;
  RejectionKind kind = RejectionKind::dropped;
  std::string reason;
};

struct CleanReport {
  std::vector<Rejection> rejections;
  /// Soft problems that did not cost a record (unparseable dates, ...).
  std::vector<std::string> warnings;

  std::size_t count(RejectionKind kind) const;
};

struct CleanResult {
  std::vector<StreetRecord> records;
  CleanReport report;
};

/// Accepts canonical ids plus a few common spellings ("new york", "wien").
std::optional<CityId> parse_city_name(std::string_view text);

/// Identifier assigned when a source gives none: "<city>-<12 hex digits>",
/// stable in the case-folded street name.
std::string derived_record_id(CityId city, std::string_view street_name);

/// Normalizes every field, drops records that cannot satisfy the hard
/// invariants (no street name, no honoree, unknown city, birth >= death),
/// then keeps one record per (city, case-folded street name): the one with
/// more populated fields, then the earliest retrieved_at, then the first
/// seen. Kept records stay in input order.
///
/// |records| + dropped + merged == |input| always holds.
CleanResult clean_dataset(const std::vector<ingest::RawRecord>& input, int latest_year);
CleanResult clean_dataset(const std::vector<ingest::RawRecord>& input);

/// CSV with columns record_ref,city,streetname,kind,reason; warnings appear
/// with kind "warning" and an empty street name.
std::string write_report_csv(const CleanReport& report);

}  // namespace streetmaps::normalize
