// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace streetmaps::util {

using CsvRow = std::vector<std::string>;

/// RFC 4180 reader. Accepts LF or CRLF line endings, quoted fields with
/// embedded separators/newlines, and a leading UTF-8 BOM. Blank lines are
/// skipped.
std::vector<CsvRow> parse_csv(std::string_view text);

std::string format_csv_row(const CsvRow& row);

/// A parsed CSV file addressed by header name.
class CsvTable {
 public:
  explicit CsvTable(std::string_view text);

  const CsvRow& header() const { return header_; }
  const std::vector<CsvRow>& rows() const { return rows_; }
  bool has_column(std::string_view name) const;
  std::optional<std::size_t> column(std::string_view name) const;

  /// Cell text, or "" when the column is missing or the row is short.
  std::string_view cell(std::size_t row, std::string_view name) const;

  /// Header names (from `required`) absent from this table.
  std::vector<std::string> missing_columns(const std::vector<std::string>& required) const;

 private:
  CsvRow header_;
  std::vector<CsvRow> rows_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace streetmaps::util
