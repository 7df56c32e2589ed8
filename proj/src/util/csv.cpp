// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/util/csv.hpp"

#include "streetmaps/util/text.hpp"

namespace streetmaps::util {

std::vector<CsvRow> parse_csv(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool in_quotes = false;
  bool row_has_content = false;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    if (row_has_content) rows.push_back(std::move(row));
    row.clear();
    row_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        row_has_content = true;
        break;
      case ',':
        end_field();
        row_has_content = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        end_row();
        break;
      case '\n':
        end_row();
        break;
      default:
        field.push_back(c);
        row_has_content = true;
    }
  }
  if (row_has_content || !field.empty()) end_row();
  return rows;
}

std::string format_csv_row(const CsvRow& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out.push_back(',');
    const auto& f = row[i];
    bool quote = f.find_first_of(",\"\r\n") != std::string::npos ||
                 (!f.empty() && (f.front() == ' ' || f.back() == ' '));
    if (!quote) {
      out += f;
      continue;
    }
    out.push_back('"');
    for (char c : f) {
      if (c == '"') out.push_back('"');
      out.push_back(c);
    }
    out.push_back('"');
  }
  out.push_back('\n');
  return out;
}

CsvTable::CsvTable(std::string_view text) {
  auto all = parse_csv(text);
  if (all.empty()) return;
  header_ = std::move(all.front());
  for (std::size_t i = 0; i < header_.size(); ++i) {
    header_[i] = std::string(trim(header_[i]));
    index_.emplace(header_[i], i);
  }
  rows_.assign(std::make_move_iterator(all.begin() + 1), std::make_move_iterator(all.end()));
}

bool CsvTable::has_column(std::string_view name) const { return index_.find(name) != index_.end(); }

std::optional<std::size_t> CsvTable::column(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string_view CsvTable::cell(std::size_t row, std::string_view name) const {
  auto col = column(name);
  if (!col || row >= rows_.size() || *col >= rows_[row].size()) return {};
  return rows_[row][*col];
}

std::vector<std::string> CsvTable::missing_columns(const std::vector<std::string>& required) const {
  std::vector<std::string> missing;
  for (const auto& r : required)
    if (!has_column(r)) missing.push_back(r);
  return missing;
}

}  // namespace streetmaps::util
