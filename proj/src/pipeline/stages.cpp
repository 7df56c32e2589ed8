// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/pipeline/stages.hpp"

#include <algorithm>
#include <map>

#include "streetmaps/domain/city.hpp"
#include "streetmaps/util/csv.hpp"

namespace streetmaps::pipeline {

std::vector<geomatch::StreetFeature> match_records(const std::vector<StreetRecord>& records,
                                                   const geomatch::OsmExtract& extract,
                                                   const geomatch::MatchOptions& options) {
  std::map<CityId, geomatch::MatchIndex> indexes;
  std::vector<geomatch::StreetFeature> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    auto it = indexes.find(r.city);
    if (it == indexes.end())
      it = indexes.try_emplace(r.city, extract, r.city, default_city_config(r.city).center, options).first;
    out.push_back(it->second.match(r));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.record.record_id < b.record.record_id; });
  return out;
}

std::string write_unmatched_csv(const std::vector<geomatch::StreetFeature>& features) {
  std::string out = util::format_csv_row({"record_id", "city", "streetname", "reason"});
  for (const auto& f : features) {
    if (f.match_method != geomatch::MatchMethod::unmatched) continue;
    out += util::format_csv_row({f.record.record_id, std::string(to_string(f.record.city)), f.record.street_name,
                                 "no way with this name in the extract"});
  }
  return out;
}

}  // namespace streetmaps::pipeline
