// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/ingest/annotations.hpp"

#include <map>

#include "streetmaps/domain/errors.hpp"
#include "streetmaps/util/csv.hpp"
#include "streetmaps/util/files.hpp"
#include "streetmaps/util/text.hpp"

namespace streetmaps::ingest {

namespace {

constexpr std::array<std::string_view, kAnnotatedFieldCount> kColumns{
    "district", "denomination", "honoree", "gender",      "occupation",
    "country",  "dob",          "dod",     "honoree_url", "image_url"};

std::optional<std::string>& slot(RawRecord& r, AnnotatedField f) {
  switch (f) {
    case AnnotatedField::district: return r.district;
    case AnnotatedField::denomination: return r.denomination;
    case AnnotatedField::honoree: return r.honoree_name;
    case AnnotatedField::gender: return r.gender;
    case AnnotatedField::occupation: return r.occupation_raw;
    case AnnotatedField::country: return r.country;
    case AnnotatedField::dob: return r.birth;
    case AnnotatedField::dod: return r.death;
    case AnnotatedField::honoree_url: return r.honoree_url;
    case AnnotatedField::image_url: return r.image_url;
  }
  return r.district;
}

std::optional<std::string> city_cell(const util::CsvTable& t, std::size_t row,
                                     const ImportOptions& options) {
  if (auto c = present(t.cell(row, "city"))) return c;
  if (options.default_city) return std::string(to_string(*options.default_city));
  return std::nullopt;
}

}  // namespace

std::string_view column_name(AnnotatedField field) {
  return kColumns[static_cast<std::size_t>(field)];
}

Resolution resolve_conflicts(const AnnotationSet& a) {
  Resolution out;
  out.record.street_name = a.street_name;
  out.record.city = a.city;
  out.record.source = Source::annotated_csv;
  out.record.source_url = a.source_url;
  out.record.retrieved_at = a.retrieved_at;

  for (std::size_t fi = 0; fi < kAnnotatedFieldCount; ++fi) {
    auto field = static_cast<AnnotatedField>(fi);
    const auto& answers = a.at(field);
    if (answers.empty()) continue;

    // key -> (count, first spelling); insertion order is irrelevant because
    // the winner is unique or nothing is adopted.
    std::map<std::string, std::pair<int, std::string>> tally;
    for (const auto& answer : answers) {
      auto spelled = util::collapse_whitespace(answer);
      if (spelled.empty()) continue;
      auto [it, inserted] = tally.try_emplace(util::casefold(spelled), 0, spelled);
      ++it->second.first;
    }
    if (tally.empty()) continue;

    int best = 0;
    int holders = 0;
    const std::string* winner = nullptr;
    for (const auto& [key, entry] : tally) {
      if (entry.first > best) {
        best = entry.first;
        holders = 1;
        winner = &entry.second;
      } else if (entry.first == best) {
        ++holders;
      }
    }
    if (holders == 1) {
      slot(out.record, field) = *winner;
    } else {
      out.review_flags.emplace_back(column_name(field));
    }
  }
  return out;
}

ImportResult import_annotated_csv_text(std::string_view text, Source source,
                                       const std::string& source_url,
                                       const ImportOptions& options) {
  if (source != Source::curated && source != Source::annotated_csv)
    throw Error("CSV import supports curated and annotated_csv sources only");
  util::CsvTable t(text);
  if (t.header().empty()) throw EmptyFile("no header row in " + source_url);

  std::vector<std::string> required{"streetname", "honoree"};
  if (source == Source::annotated_csv) required.insert(required.begin() + 1, "annotator");
  if (auto missing = t.missing_columns(required); !missing.empty())
    throw SchemaMismatch("CSV " + source_url + " is missing required columns", std::move(missing));
  if (t.rows().empty()) throw EmptyFile("no data rows in " + source_url);

  const std::string stamp = options.clock();

  if (source == Source::curated) {
    std::vector<RawRecord> out;
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
      RawRecord r;
      r.record_id = present(t.cell(i, "record_id"));
      r.street_name = std::string(util::trim(t.cell(i, "streetname")));
      r.city = city_cell(t, i, options);
      for (std::size_t fi = 0; fi < kAnnotatedFieldCount; ++fi)
        slot(r, static_cast<AnnotatedField>(fi)) = present(t.cell(i, kColumns[fi]));
      r.source = Source::curated;
      r.source_url = source_url + "#row=" + std::to_string(i + 2);
      r.retrieved_at = stamp;
      out.push_back(std::move(r));
    }
    return out;
  }

  std::vector<AnnotationSet> sets;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    auto street = util::collapse_whitespace(t.cell(i, "streetname"));
    auto city = city_cell(t, i, options);
    auto key = std::make_pair(city.value_or(""), util::casefold(street));
    auto [it, inserted] = index.try_emplace(key, sets.size());
    if (inserted) {
      AnnotationSet s;
      s.street_name = street;
      s.city = city;
      s.source_url = source_url + "#street=" + street;
      s.retrieved_at = stamp;
      sets.push_back(std::move(s));
    }
    auto& s = sets[it->second];
    s.annotators.emplace_back(util::trim(t.cell(i, "annotator")));
    for (std::size_t fi = 0; fi < kAnnotatedFieldCount; ++fi)
      if (auto v = present(t.cell(i, kColumns[fi]))) s.values[fi].push_back(*v);
  }
  return sets;
}

ImportResult import_annotated_csv(const std::filesystem::path& file, Source source,
                                  const ImportOptions& options) {
  auto text = util::read_file(file);
  if (util::trim(text).empty()) throw EmptyFile("empty file " + file.string());
  return import_annotated_csv_text(text, source, file.generic_string(), options);
}

}  // namespace streetmaps::ingest
