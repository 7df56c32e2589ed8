// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/domain/validate.hpp"

#include <chrono>
#include <set>

#include "streetmaps/util/text.hpp"

namespace streetmaps {

int current_year() {
  using namespace std::chrono;
  return static_cast<int>(year_month_day{floor<days>(system_clock::now())}.year());
}

std::vector<Violation> validate_record(const StreetRecord& r, int latest_year) {
  std::vector<Violation> out;
  if (util::trim(r.record_id).empty()) out.push_back({"record_id", "must be non-empty"});
  if (util::trim(r.street_name).empty()) out.push_back({"street_name", "must be non-empty"});
  if (util::trim(r.honoree_name).empty()) out.push_back({"honoree_name", "must be non-empty"});
  auto present_nonempty = [&](const std::optional<std::string>& v, const char* field) {
    if (v && v->empty()) out.push_back({field, "present optionals must be non-empty"});
  };
  present_nonempty(r.district, "district");
  present_nonempty(r.honoree_url, "honoree_url");
  present_nonempty(r.image_url, "image_url");
  if (r.birth_year && r.death_year && !(*r.birth_year < *r.death_year))
    out.push_back({"birth_year", "birth_year < death_year"});
  if (r.denomination_year &&
      (*r.denomination_year < kEarliestDenominationYear || *r.denomination_year > latest_year))
    out.push_back({"denomination_year", "within [" + std::to_string(kEarliestDenominationYear) +
                                            ", " + std::to_string(latest_year) + "]"});
  return out;
}

std::vector<Violation> validate_dataset(std::span<const StreetRecord> records, int latest_year) {
  std::vector<Violation> out;
  std::set<std::string, std::less<>> seen;
  for (const auto& r : records) {
    for (auto& v : validate_record(r, latest_year))
      out.push_back({r.record_id + ": " + v.field, std::move(v.rule)});
    if (!seen.insert(r.record_id).second)
      out.push_back({r.record_id + ": record_id", "unique within the dataset"});
  }
  return out;
}

}  // namespace streetmaps
