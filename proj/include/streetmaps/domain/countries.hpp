// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace streetmaps {

struct IsoCountry {
  std::string code;
  std::string name;
  std::string official_name;
};

/// ISO 3166-1 alpha-2 assignments, sorted by code (data/countries.csv).
const std::vector<IsoCountry>& iso_countries();

bool is_iso_alpha2(std::string_view code);

}  // namespace streetmaps
