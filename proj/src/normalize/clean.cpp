// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/normalize/clean.hpp"

#include <map>
#include <set>

#include "streetmaps/domain/validate.hpp"
#include "streetmaps/normalize/normalizers.hpp"
#include "streetmaps/util/csv.hpp"
#include "streetmaps/util/text.hpp"

namespace streetmaps::normalize {

std::size_t CleanReport::count(RejectionKind kind) const {
  std::size_t n = 0;
  for (const auto& r : rejections) n += r.kind == kind;
  return n;
}

std::optional<CityId> parse_city_name(std::string_view text) {
  static const std::map<std::string, CityId, std::less<>> aliases{
      {"paris", CityId::paris},       {"vienna", CityId::vienna},      {"wien", CityId::vienna},
      {"london", CityId::london},     {"newyork", CityId::newyork},    {"new york", CityId::newyork},
      {"new york city", CityId::newyork}, {"nyc", CityId::newyork}};
  auto key = util::fold_key(text);
  if (auto it = aliases.find(key); it != aliases.end()) return it->second;
  return std::nullopt;
}

std::string derived_record_id(CityId city, std::string_view street_name) {
  auto h = util::hex64(util::fnv1a64(util::fold_key(street_name)));
  return std::string(to_string(city)) + "-" + h.substr(0, 12);
}

namespace {

struct Candidate {
  std::size_t input_index;
  StreetRecord record;
  int populated;
  std::string retrieved_at;
  bool id_from_source;
};

std::optional<std::string> clean_text(const std::optional<std::string>& v) {
  if (!v) return std::nullopt;
  auto s = util::collapse_whitespace(*v);
  if (s.empty()) return std::nullopt;
  return s;
}

std::optional<int> year_field(const std::optional<std::string>& v, const char* field,
                              const std::string& ref, std::vector<std::string>& warnings) {
  if (!v) return std::nullopt;
  auto parsed = parse_year(*v);
  if (parsed.warning) warnings.push_back(ref + ": " + field + ": " + *parsed.warning);
  return parsed.year;
}

}  // namespace

CleanResult clean_dataset(const std::vector<ingest::RawRecord>& input) {
  return clean_dataset(input, current_year());
}

CleanResult clean_dataset(const std::vector<ingest::RawRecord>& input, int latest_year) {
  CleanResult result;
  auto& report = result.report;
  std::vector<Candidate> candidates;

  for (std::size_t i = 0; i < input.size(); ++i) {
    const auto& raw = input[i];
    std::string ref = raw.record_id.value_or(raw.source_url.empty()
                                                 ? "input#" + std::to_string(i + 1)
                                                 : raw.source_url);
    auto street = util::collapse_whitespace(raw.street_name);
    auto drop = [&](std::string reason) {
      report.rejections.push_back({ref, raw.city.value_or(""), street, RejectionKind::dropped,
                                   std::move(reason)});
    };
    for (const auto& w : raw.warnings) report.warnings.push_back(ref + ": " + w);

    auto city = raw.city ? parse_city_name(*raw.city) : std::nullopt;
    if (!city) {
      drop("unknown city '" + raw.city.value_or("") + "'");
      continue;
    }
    if (street.empty()) {
      drop("missing street_name");
      continue;
    }
    auto honoree = clean_text(raw.honoree_name);
    if (!honoree) {
      drop("missing honoree_name");
      continue;
    }

    StreetRecord r;
    r.street_name = street;
    r.city = *city;
    r.honoree_name = *honoree;
    r.district = clean_text(raw.district);
    r.denomination_year = year_field(raw.denomination, "denomination", ref, report.warnings);
    r.birth_year = year_field(raw.birth, "dob", ref, report.warnings);
    r.death_year = year_field(raw.death, "dod", ref, report.warnings);
    if (r.birth_year && r.death_year && *r.birth_year >= *r.death_year) {
      drop("birth_year " + std::to_string(*r.birth_year) + " >= death_year " +
           std::to_string(*r.death_year));
      continue;
    }
    if (r.denomination_year && *r.denomination_year > latest_year) {
      report.warnings.push_back(ref + ": denomination year " + std::to_string(*r.denomination_year) +
                                " is in the future, dropped");
      r.denomination_year.reset();
    }
    r.gender = normalize_gender(raw.gender.value_or(""));
    r.occupation_raw = util::collapse_whitespace(raw.occupation_raw.value_or(""));
    r.occupation_group = map_occupation(r.occupation_raw);
    r.country = normalize_country(raw.country.value_or(""));
    r.honoree_url = clean_text(raw.honoree_url);
    r.image_url = clean_text(raw.image_url);
    r.source = raw.source;

    bool id_from_source = false;
    if (auto id = clean_text(raw.record_id)) {
      r.record_id = *id;
      id_from_source = true;
    } else {
      r.record_id = derived_record_id(*city, street);
    }

    if (auto v = validate_record(r, latest_year); !v.empty()) {
      drop(v.front().field + ": " + v.front().rule);
      continue;
    }
    candidates.push_back({i, std::move(r), raw.populated_fields(), raw.retrieved_at, id_from_source});
  }

  // Deduplicate on (city, folded street name).
  std::map<std::pair<CityId, std::string>, std::size_t> winner_of;
  std::vector<bool> keep(candidates.size(), true);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    auto key = std::make_pair(candidates[c].record.city, util::casefold(candidates[c].record.street_name));
    auto [it, inserted] = winner_of.try_emplace(key, c);
    if (inserted) continue;
    auto& incumbent = candidates[it->second];
    auto& challenger = candidates[c];
    bool challenger_wins =
        challenger.populated > incumbent.populated ||
        (challenger.populated == incumbent.populated && challenger.retrieved_at < incumbent.retrieved_at);
    std::size_t loser = challenger_wins ? it->second : c;
    std::size_t winner = challenger_wins ? c : it->second;
    keep[loser] = false;
    it->second = winner;
  }
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (keep[c]) continue;
    const auto& loser = candidates[c];
    auto key = std::make_pair(loser.record.city, util::casefold(loser.record.street_name));
    const auto& winner = candidates[winner_of.at(key)];
    const auto& raw = input[loser.input_index];
    std::string ref = raw.record_id.value_or(raw.source_url.empty()
                                                 ? "input#" + std::to_string(loser.input_index + 1)
                                                 : raw.source_url);
    report.rejections.push_back({ref, std::string(to_string(loser.record.city)),
                                 loser.record.street_name, RejectionKind::merged,
                                 "duplicate of " + winner.record.record_id});
  }

  // Source-given ids may collide across records; fall back to derived ids.
  std::set<std::string> ids;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (!keep[c]) continue;
    auto& r = candidates[c].record;
    if (!ids.insert(r.record_id).second) {
      report.warnings.push_back(r.record_id + ": duplicate record_id, replaced by derived id");
      r.record_id = derived_record_id(r.city, r.street_name);
      ids.insert(r.record_id);
    }
    result.records.push_back(std::move(r));
  }
  return result;
}

std::string write_report_csv(const CleanReport& report) {
  std::string out = util::format_csv_row({"record_ref", "city", "streetname", "kind", "reason"});
  for (const auto& r : report.rejections)
    out += util::format_csv_row({r.record_ref, r.city, r.street_name,
                                 r.kind == RejectionKind::dropped ? "dropped" : "merged", r.reason});
  for (const auto& w : report.warnings) out += util::format_csv_row({"", "", "", "warning", w});
  return out;
}

}  // namespace streetmaps::normalize
