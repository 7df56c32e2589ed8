// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/domain/record_csv.hpp"

#include <charconv>

#include "streetmaps/domain/errors.hpp"

namespace streetmaps {

namespace {

std::string opt_text(const std::optional<std::string>& v) { return v.value_or(""); }
std::string opt_year(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

std::optional<std::string> text_or_absent(std::string_view s) {
  if (s.empty()) return std::nullopt;
  return std::string(s);
}

std::optional<int> year_or_absent(std::string_view s, std::string_view column) {
  if (s.empty()) return std::nullopt;
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw Error("column " + std::string(column) + ": not an integer year: '" + std::string(s) + "'");
  return v;
}

template <class E>
E enum_cell(std::string_view s, std::string_view column) {
  auto v = parse_enum<E>(s);
  if (!v) throw Error("column " + std::string(column) + ": unexpected value '" + std::string(s) + "'");
  return *v;
}

}  // namespace

util::CsvRow to_csv_row(const StreetRecord& r) {
  return {r.record_id,
          r.street_name,
          opt_text(r.district),
          opt_year(r.denomination_year),
          r.honoree_name,
          std::string(to_string(r.gender)),
          r.occupation_raw,
          std::string(to_string(r.occupation_group)),
          std::string(r.country.str()),
          opt_year(r.birth_year),
          opt_year(r.death_year),
          opt_text(r.honoree_url),
          opt_text(r.image_url),
          std::string(to_string(r.source)),
          std::string(to_string(r.city))};
}

StreetRecord record_from_csv(const util::CsvTable& t, std::size_t i) {
  StreetRecord r;
  r.record_id = t.cell(i, "record_id");
  r.street_name = t.cell(i, "streetname");
  r.district = text_or_absent(t.cell(i, "district"));
  r.denomination_year = year_or_absent(t.cell(i, "denomination"), "denomination");
  r.honoree_name = t.cell(i, "honoree");
  r.gender = enum_cell<Gender>(t.cell(i, "gender"), "gender");
  r.occupation_raw = t.cell(i, "occupation");
  r.occupation_group = enum_cell<OccupationGroup>(t.cell(i, "occupation_group"), "occupation_group");
  auto country = t.cell(i, "country");
  if (country == "unknown") {
    r.country = CountryCode::unknown();
  } else if (auto code = CountryCode::from_alpha2(country)) {
    r.country = *code;
  } else {
    throw Error("column country: not an ISO alpha-2 code: '" + std::string(country) + "'");
  }
  r.birth_year = year_or_absent(t.cell(i, "dob"), "dob");
  r.death_year = year_or_absent(t.cell(i, "dod"), "dod");
  r.honoree_url = text_or_absent(t.cell(i, "honoree_url"));
  r.image_url = text_or_absent(t.cell(i, "image_url"));
  r.source = enum_cell<Source>(t.cell(i, "source"), "source");
  r.city = enum_cell<CityId>(t.cell(i, "city"), "city");
  return r;
}

std::string write_records_csv(const std::vector<StreetRecord>& records) {
  std::string out = util::format_csv_row(kCanonicalColumns);
  for (const auto& r : records) out += util::format_csv_row(to_csv_row(r));
  return out;
}

std::vector<StreetRecord> read_records_csv(std::string_view text) {
  util::CsvTable table(text);
  if (auto missing = table.missing_columns(kCanonicalColumns); !missing.empty())
    throw SchemaMismatch("canonical CSV is missing columns", std::move(missing));
  std::vector<StreetRecord> out;
  out.reserve(table.rows().size());
  for (std::size_t i = 0; i < table.rows().size(); ++i) out.push_back(record_from_csv(table, i));
  return out;
}

}  // namespace streetmaps
