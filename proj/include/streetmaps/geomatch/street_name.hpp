// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "streetmaps/domain/types.hpp"

namespace streetmaps::geomatch {

enum class Language { en, fr, de };

Language language_of(CityId city);

/// Comparison form of a street name: case-folded, trimmed, typographic
/// apostrophes straightened, hyphens treated as spaces and abbreviations
/// expanded. Without a language only the rules safe in every city apply
/// (St/Ave/Av./Str., "strasse" -> "straße", d'/l' elision); English rules
/// are used for "St" (Saint when leading, Street otherwise).
/// Idempotent: normalizing a normalized name returns it unchanged.
std::string normalize_street_name(std::string_view name,
                                  std::optional<Language> language = std::nullopt);

}  // namespace streetmaps::geomatch
