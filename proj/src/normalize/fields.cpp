// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>

#include "streetmaps/domain/countries.hpp"
#include "streetmaps/normalize/normalizers.hpp"
#include "streetmaps/util/csv.hpp"
#include "streetmaps/util/text.hpp"

namespace streetmaps::data {
extern const std::string_view country_aliases_csv;
}

namespace streetmaps::normalize {

Gender normalize_gender(std::string_view raw) {
  static const std::map<std::string, Gender, std::less<>> synonyms{
      {"female", Gender::female},   {"f", Gender::female},         {"w", Gender::female},
      {"woman", Gender::female},    {"women", Gender::female},     {"girl", Gender::female},
      {"weiblich", Gender::female}, {"frau", Gender::female},      {"femme", Gender::female},
      {"féminin", Gender::female},  {"feminine", Gender::female},  {"cisgender woman", Gender::female},
      {"trans woman", Gender::female}, {"transgender female", Gender::female},
      {"male", Gender::male},       {"m", Gender::male},           {"man", Gender::male},
      {"men", Gender::male},        {"boy", Gender::male},         {"männlich", Gender::male},
      {"mann", Gender::male},       {"homme", Gender::male},       {"masculin", Gender::male},
      {"masculine", Gender::male},  {"cisgender man", Gender::male}, {"trans man", Gender::male},
      {"transgender male", Gender::male},
  };
  auto key = util::fold_key(raw);
  if (auto it = synonyms.find(key); it != synonyms.end()) return it->second;
  if (auto g = parse_enum<Gender>(key)) return *g;
  return Gender::unknown;
}

namespace {

std::map<std::string, std::string, std::less<>> build_country_index() {
  std::map<std::string, std::string, std::less<>> index;
  // Aliases first so that official ISO names cannot be shadowed.
  util::CsvTable aliases(data::country_aliases_csv);
  for (std::size_t i = 0; i < aliases.rows().size(); ++i)
    index[util::fold_key(aliases.cell(i, "alias"))] = std::string(aliases.cell(i, "code"));
  for (const auto& c : iso_countries()) {
    index[util::fold_key(c.name)] = c.code;
    index[util::fold_key(c.official_name)] = c.code;
  }
  return index;
}

}  // namespace

CountryCode normalize_country(std::string_view raw) {
  static const auto index = build_country_index();
  auto text = util::collapse_whitespace(raw);
  if (text.empty()) return CountryCode::unknown();

  if (text.size() == 2) {
    std::string upper{static_cast<char>(std::toupper(static_cast<unsigned char>(text[0]))),
                      static_cast<char>(std::toupper(static_cast<unsigned char>(text[1])))};
    if (auto code = CountryCode::from_alpha2(upper)) return *code;
  }
  auto key = util::casefold(text);
  if (key.starts_with("the ")) key.erase(0, 4);
  if (auto it = index.find(key); it != index.end())
    if (auto code = CountryCode::from_alpha2(it->second)) return *code;
  return CountryCode::unknown();
}

namespace {

std::optional<int> digits(std::string_view s) {
  if (s.empty() || s.size() > 4) return std::nullopt;
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::optional<int> month_number(std::string_view word) {
  static const std::map<std::string, int, std::less<>> months{
      {"january", 1},  {"jan", 1},   {"jänner", 1},   {"januar", 1},  {"february", 2}, {"feb", 2},
      {"februar", 2},  {"march", 3}, {"mar", 3},      {"märz", 3},    {"april", 4},    {"apr", 4},
      {"may", 5},      {"mai", 5},   {"june", 6},     {"jun", 6},     {"juni", 6},     {"july", 7},
      {"jul", 7},      {"juli", 7},  {"august", 8},   {"aug", 8},     {"september", 9}, {"sep", 9},
      {"sept", 9},     {"october", 10}, {"oct", 10},  {"oktober", 10}, {"november", 11}, {"nov", 11},
      {"december", 12}, {"dec", 12}, {"dezember", 12}};
  std::string w = util::casefold(word);
  while (!w.empty() && w.back() == '.') w.pop_back();
  if (auto it = months.find(w); it != months.end()) return it->second;
  return std::nullopt;
}

bool valid_day(std::string_view s) {
  auto d = digits(s);
  return d && *d >= 1 && *d <= 31 && s.size() <= 2;
}

bool valid_month(std::string_view s) {
  auto m = digits(s);
  return m && *m >= 1 && *m <= 12 && s.size() <= 2;
}

// Year of a recognised date shape; nullopt when the shape is not recognised.
std::optional<int> extract_year(std::string_view t) {
  if (t.size() == 4 && all_digits(t)) return digits(t);

  // YYYY-MM-DD with optional "T..." suffix
  if (t.size() >= 10 && t[4] == '-' && t[7] == '-' && all_digits(t.substr(0, 4)) &&
      valid_month(t.substr(5, 2)) && valid_day(t.substr(8, 2)) &&
      (t.size() == 10 || t[10] == 'T' || t[10] == ' '))
    return digits(t.substr(0, 4));

  // DD.MM.YYYY (day and month may be one digit)
  auto parts = util::split(t, '.');
  if (parts.size() == 3 && valid_day(parts[0]) && valid_month(parts[1]) && parts[2].size() == 4 &&
      all_digits(parts[2]))
    return digits(parts[2]);

  // "Month D, YYYY" and "D Month YYYY" (optionally "D. Month YYYY")
  std::string flat;
  for (char c : t) flat.push_back(c == ',' ? ' ' : c);
  std::vector<std::string> words;
  for (auto& w : util::split(util::collapse_whitespace(flat), ' '))
    if (!w.empty()) words.push_back(w);
  if (words.size() == 3 && words[2].size() == 4 && all_digits(words[2])) {
    auto day0 = words[0];
    if (!day0.empty() && day0.back() == '.') day0.pop_back();
    if (month_number(words[0]) && valid_day(words[1])) return digits(words[2]);
    if (valid_day(day0) && month_number(words[1])) return digits(words[2]);
  }
  return std::nullopt;
}

}  // namespace

ParsedYear parse_year(std::string_view raw) {
  auto t = util::trim(raw);
  if (t.empty()) return {};
  auto year = extract_year(t);
  if (!year) {
    if (all_digits(t))
      return {std::nullopt, "year '" + std::string(t) + "' outside [" +
                                std::to_string(kMinParsedYear) + ", " +
                                std::to_string(kMaxParsedYear) + "]"};
    return {std::nullopt, "unrecognised date '" + std::string(t) + "'"};
  }
  if (*year < kMinParsedYear || *year > kMaxParsedYear)
    return {std::nullopt, "year " + std::to_string(*year) + " outside [" +
                              std::to_string(kMinParsedYear) + ", " +
                              std::to_string(kMaxParsedYear) + "]"};
  return {year, std::nullopt};
}

}  // namespace streetmaps::normalize
