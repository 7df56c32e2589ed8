// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/ingest/raw_record.hpp"

#include <chrono>
#include <ctime>

#include "streetmaps/domain/errors.hpp"
#include "streetmaps/domain/record_csv.hpp"
#include "streetmaps/util/csv.hpp"
#include "streetmaps/util/text.hpp"

namespace streetmaps::ingest {

int RawRecord::populated_fields() const {
  int n = 0;
  for (const auto* f : {&district, &denomination, &honoree_name, &gender, &occupation_raw,
                        &country, &birth, &death, &honoree_url, &image_url})
    if (f->has_value()) ++n;
  return n;
}

std::string utc_now_iso8601() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<std::string> present(std::string_view text) {
  auto t = util::trim(text);
  if (t.empty()) return std::nullopt;
  return std::string(t);
}

namespace {

const std::vector<std::string>& raw_columns() {
  static const std::vector<std::string> cols = [] {
    auto c = kCanonicalColumns;
    c.insert(c.end(), {"source_url", "retrieved_at", "warnings"});
    return c;
  }();
  return cols;
}

}  // namespace

std::string write_raw_csv(const std::vector<RawRecord>& records) {
  std::string out = util::format_csv_row(raw_columns());
  for (const auto& r : records) {
    auto v = [](const std::optional<std::string>& s) { return s.value_or(""); };
    out += util::format_csv_row({v(r.record_id), r.street_name, v(r.district), v(r.denomination),
                                 v(r.honoree_name), v(r.gender), v(r.occupation_raw), "",
                                 v(r.country), v(r.birth), v(r.death), v(r.honoree_url),
                                 v(r.image_url), std::string(to_string(r.source)), v(r.city),
                                 r.source_url, r.retrieved_at, util::join(r.warnings, "; ")});
  }
  return out;
}

std::vector<RawRecord> read_raw_csv(std::string_view text) {
  util::CsvTable t(text);
  std::vector<std::string> required{"streetname", "source"};
  if (auto missing = t.missing_columns(required); !missing.empty())
    throw SchemaMismatch("raw CSV is missing columns", std::move(missing));
  std::vector<RawRecord> out;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    RawRecord r;
    r.record_id = present(t.cell(i, "record_id"));
    r.street_name = std::string(util::trim(t.cell(i, "streetname")));
    r.city = present(t.cell(i, "city"));
    r.district = present(t.cell(i, "district"));
    r.denomination = present(t.cell(i, "denomination"));
    r.honoree_name = present(t.cell(i, "honoree"));
    r.gender = present(t.cell(i, "gender"));
    r.occupation_raw = present(t.cell(i, "occupation"));
    r.country = present(t.cell(i, "country"));
    r.birth = present(t.cell(i, "dob"));
    r.death = present(t.cell(i, "dod"));
    r.honoree_url = present(t.cell(i, "honoree_url"));
    r.image_url = present(t.cell(i, "image_url"));
    auto src = parse_enum<Source>(util::trim(t.cell(i, "source")));
    if (!src)
      throw Error("raw CSV row " + std::to_string(i + 2) + ": unknown source '" +
                  std::string(t.cell(i, "source")) + "'");
    r.source = *src;
    r.source_url = t.cell(i, "source_url");
    r.retrieved_at = t.cell(i, "retrieved_at");
    if (auto w = util::trim(t.cell(i, "warnings")); !w.empty()) {
      for (auto& part : util::split(w, ';'))
        if (auto p = present(part)) r.warnings.push_back(*p);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace streetmaps::ingest
