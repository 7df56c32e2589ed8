// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "streetmaps/normalize/normalizers.hpp"
#include "streetmaps/util/csv.hpp"
#include "streetmaps/util/text.hpp"

namespace streetmaps::data {
extern const std::string_view occupation_keywords_csv;
}

namespace streetmaps::normalize {

namespace {

// Bytes >= 0x80 belong to multi-byte letters, so they count as word bytes.
bool word_byte(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u >= 0x80;
}

bool boundary_before(std::string_view s, std::size_t pos) { return pos == 0 || !word_byte(s[pos - 1]); }

// Length of an accepted match of `kw` at `pos`, or 0.
std::size_t match_at(std::string_view s, std::size_t pos, std::string_view kw) {
  if (!boundary_before(s, pos)) return 0;
  std::size_t end = pos + kw.size();
  for (std::string_view suffix : {"", "s", "es"}) {
    if (s.substr(end, suffix.size()) != suffix) continue;
    std::size_t e = end + suffix.size();
    if (e == s.size() || !word_byte(s[e])) return kw.size();
  }
  return 0;
}

}  // namespace

const std::vector<KeywordEntry>& occupation_keywords() {
  static const std::vector<KeywordEntry> table = [] {
    util::CsvTable t(data::occupation_keywords_csv);
    std::vector<KeywordEntry> out;
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
      auto group = parse_enum<OccupationGroup>(util::trim(t.cell(i, "group")));
      auto kw = util::fold_key(t.cell(i, "keyword"));
      if (group && !kw.empty()) out.push_back({std::move(kw), *group});
    }
    return out;
  }();
  return table;
}

std::vector<std::string> lint_keyword_table(std::string_view csv) {
  std::vector<std::string> problems;
  util::CsvTable t(csv);
  if (t.header() != util::CsvRow{"keyword", "group"})
    problems.emplace_back("header must be exactly keyword,group");
  std::map<std::string, std::string> seen;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    std::string line = "line " + std::to_string(i + 2) + ": ";
    std::string kw(t.cell(i, "keyword"));
    std::string group(t.cell(i, "group"));
    if (t.rows()[i].size() != 2) problems.push_back(line + "expected 2 cells");
    if (kw.empty()) problems.push_back(line + "empty keyword");
    if (util::fold_key(kw) != kw) problems.push_back(line + "keyword not in folded form: " + kw);
    if (!parse_enum<OccupationGroup>(group)) problems.push_back(line + "unknown group: " + group);
    auto [it, inserted] = seen.emplace(kw, group);
    if (!inserted)
      problems.push_back(line + "duplicate keyword '" + kw + "' (" + it->second + ", " + group + ")");
  }
  return problems;
}

OccupationGroup map_occupation(std::string_view raw) {
  auto text = util::fold_key(raw);
  if (text.empty()) return OccupationGroup::other;
  if (auto g = parse_enum<OccupationGroup>(text)) return *g;

  const KeywordEntry* best = nullptr;
  std::size_t best_len = 0;
  std::size_t best_pos = 0;
  for (const auto& entry : occupation_keywords()) {
    for (auto pos = text.find(entry.keyword); pos != std::string::npos;
         pos = text.find(entry.keyword, pos + 1)) {
      auto len = match_at(text, pos, entry.keyword);
      if (len == 0) continue;
      bool better = len > best_len || (len == best_len && pos < best_pos) ||
                    (len == best_len && pos == best_pos && best && entry.keyword < best->keyword);
      if (!best || better) {
        best = &entry;
        best_len = len;
        best_pos = pos;
      }
      break;  // later occurrences of the same keyword cannot beat this one
    }
  }
  return best ? best->group : OccupationGroup::other;
}

}  // namespace streetmaps::normalize
