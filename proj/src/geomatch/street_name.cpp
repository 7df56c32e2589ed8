// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/geomatch/street_name.hpp"

#include <map>
#include <vector>

#include "streetmaps/util/text.hpp"

namespace streetmaps::geomatch {

Language language_of(CityId city) {
  switch (city) {
    case CityId::paris: return Language::fr;
    case CityId::vienna: return Language::de;
    case CityId::london:
    case CityId::newyork: return Language::en;
  }
  return Language::en;
}

namespace {

using Table = std::map<std::string, std::string, std::less<>>;

const Table& universal() {
  static const Table t{{"ave", "avenue"}, {"av", "avenue"}, {"str", "straße"}, {"strasse", "straße"}};
  return t;
}

const Table& table_for(Language lang) {
  static const Table en{{"rd", "road"},      {"blvd", "boulevard"}, {"ln", "lane"},    {"pl", "place"},
                        {"sq", "square"},    {"dr", "drive"},       {"ct", "court"},   {"pkwy", "parkway"},
                        {"hwy", "highway"},  {"ter", "terrace"},    {"cres", "crescent"}, {"gdns", "gardens"},
                        {"mt", "mount"},     {"ft", "fort"},        {"bway", "broadway"}};
  static const Table fr{{"bd", "boulevard"}, {"bld", "boulevard"}, {"boul", "boulevard"}, {"pl", "place"},
                        {"fg", "faubourg"},  {"imp", "impasse"},   {"pass", "passage"},   {"sq", "square"},
                        {"qu", "quai"},      {"st", "saint"},      {"ste", "sainte"},     {"r", "rue"},
                        {"cr", "cours"},     {"all", "allée"},     {"che", "chemin"}};
  static const Table de{{"pl", "platz"}, {"g", "gasse"}, {"st", "sankt"}, {"prom", "promenade"}};
  switch (lang) {
    case Language::en: return en;
    case Language::fr: return fr;
    case Language::de: return de;
  }
  return en;
}

const Table& en_directions() {
  static const Table t{{"n", "north"}, {"s", "south"}, {"e", "east"}, {"w", "west"}};
  return t;
}

bool starts_with_vowel(std::string_view w) {
  if (w.empty()) return false;
  static const std::vector<std::string_view> vowels{"a", "e", "i", "o", "u", "h", "à", "â", "é",
                                                    "è", "ê", "î", "ô", "û"};
  for (auto v : vowels)
    if (w.starts_with(v)) return true;
  return false;
}

std::string expand(const std::string& token, std::size_t index, std::size_t count,
                   std::optional<Language> lang) {
  std::string bare = token;
  while (!bare.empty() && bare.back() == '.') bare.pop_back();
  if (bare.empty()) return bare;

  Language effective = lang.value_or(Language::en);
  if (bare == "st" && effective == Language::en) return (index == 0 && count > 1) ? "saint" : "street";
  if (lang) {
    const auto& t = table_for(*lang);
    if (auto it = t.find(bare); it != t.end()) return it->second;
    if (*lang == Language::en && index == 0 && count > 1) {
      if (auto it = en_directions().find(bare); it != en_directions().end()) return it->second;
    }
  }
  if (auto it = universal().find(bare); it != universal().end()) return it->second;

  // German compounds: "Hauptstr." and "Hauptstrasse" both read "hauptstraße".
  if (token.size() > 4 && token.ends_with("str.")) return token.substr(0, token.size() - 4) + "straße";
  if (bare.size() > 7 && bare.ends_with("strasse")) return bare.substr(0, bare.size() - 7) + "straße";
  return bare;
}

}  // namespace

std::string normalize_street_name(std::string_view name, std::optional<Language> language) {
  std::string s = util::casefold(util::straighten_apostrophes(name));
  for (auto& c : s)
    if (c == '-' || c == ',') c = ' ';
  s = util::collapse_whitespace(s);

  std::vector<std::string> raw;
  for (auto& t : util::split(s, ' '))
    if (!t.empty()) raw.push_back(t);

  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < raw.size(); ++i) tokens.push_back(expand(raw[i], i, raw.size(), language));

  // Elision: "d' arc" -> "d'arc"; in French also "de arc" -> "d'arc".
  std::vector<std::string> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    bool has_next = i + 1 < tokens.size();
    if ((t == "d'" || t == "l'") && has_next) {
      out.push_back(t + tokens[++i]);
    } else if (t == "de" && has_next && language == Language::fr && starts_with_vowel(tokens[i + 1])) {
      out.push_back("d'" + tokens[++i]);
    } else if (!t.empty()) {
      out.push_back(t);
    }
  }
  return util::join(out, " ");
}

}  // namespace streetmaps::geomatch
