// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/domain/countries.hpp"

#include <algorithm>

#include "streetmaps/util/csv.hpp"

namespace streetmaps {

namespace data {
extern const std::string_view countries_csv;
}

const std::vector<IsoCountry>& iso_countries() {
  static const std::vector<IsoCountry> table = [] {
    util::CsvTable csv(data::countries_csv);
    std::vector<IsoCountry> out;
    for (std::size_t i = 0; i < csv.rows().size(); ++i)
      out.push_back({std::string(csv.cell(i, "code")), std::string(csv.cell(i, "name")),
                     std::string(csv.cell(i, "official_name"))});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.code < b.code; });
    return out;
  }();
  return table;
}

bool is_iso_alpha2(std::string_view code) {
  const auto& t = iso_countries();
  auto it = std::lower_bound(t.begin(), t.end(), code,
                             [](const IsoCountry& c, std::string_view k) { return c.code < k; });
  return it != t.end() && it->code == code;
}

}  // namespace streetmaps
