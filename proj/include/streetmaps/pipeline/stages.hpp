// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "streetmaps/geomatch/matcher.hpp"

namespace streetmaps::pipeline {

/// Matches every record against one extract, grouping records by city so
/// each city uses its own language rules and center. Output is in
/// record_id order and includes unmatched features.
std::vector<geomatch::StreetFeature> match_records(const std::vector<StreetRecord>& records,
                                                   const geomatch::OsmExtract& extract,
                                                   const geomatch::MatchOptions& options = {});

/// CSV with columns record_id,city,streetname,reason for unmatched features.
std::string write_unmatched_csv(const std::vector<geomatch::StreetFeature>& features);

}  // namespace streetmaps::pipeline
