// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "streetmaps/domain/types.hpp"

namespace streetmaps {

inline constexpr int kEarliestDenominationYear = 1000;

struct Violation {
  std::string field;
  std::string rule;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Calendar year of the system clock (UTC).
int current_year();

/// Checks every per-record invariant of StreetRecord. `latest_year` bounds
/// denomination_year from above.
std::vector<Violation> validate_record(const StreetRecord& record, int latest_year);

inline std::vector<Violation> validate_record(const StreetRecord& record) {
  return validate_record(record, current_year());
}

/// Per-record checks plus record_id uniqueness. Violation fields are prefixed
/// with the offending record_id ("<id>: field").
std::vector<Violation> validate_dataset(std::span<const StreetRecord> records, int latest_year);

}  // namespace streetmaps
