// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "streetmaps/domain/types.hpp"
#include "streetmaps/util/csv.hpp"

namespace streetmaps {

/// Column order of the canonical dataset exchange CSV. An empty cell encodes
/// an absent optional.
inline const std::vector<std::string> kCanonicalColumns{
    "record_id", "streetname", "district", "denomination", "honoree",
    "gender",    "occupation", "occupation_group", "country", "dob",
    "dod",       "honoree_url", "image_url", "source", "city"};

util::CsvRow to_csv_row(const StreetRecord& record);

/// Reads one canonical row. Throws Error on out-of-domain enum values or
/// malformed integers.
StreetRecord record_from_csv(const util::CsvTable& table, std::size_t row);

std::string write_records_csv(const std::vector<StreetRecord>& records);

/// Throws SchemaMismatch if any canonical column is missing.
std::vector<StreetRecord> read_records_csv(std::string_view text);

}  // namespace streetmaps
