// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace streetmaps::util {

/// Strips ASCII whitespace (and NBSP) from both ends.
std::string_view trim(std::string_view s);

/// Trims and collapses interior whitespace runs to a single space.
std::string collapse_whitespace(std::string_view s);

/// Unicode-aware lowercase for the Latin scripts our sources use (ASCII,
/// Latin-1 Supplement, Latin Extended-A). Other code points pass through.
std::string casefold(std::string_view s);

/// casefold(collapse_whitespace(s)); the comparison key for free-text values.
std::string fold_key(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool starts_with_ci(std::string_view s, std::string_view prefix);

/// Appends the UTF-8 encoding of `cp` to `out`.
void append_utf8(std::string& out, char32_t cp);

/// Replaces typographic apostrophes (U+2019, U+02BC, U+2018) with '\''.
std::string straighten_apostrophes(std::string_view s);

/// 64-bit FNV-1a; used for stable identifiers.
std::uint64_t fnv1a64(std::string_view s);

std::string hex64(std::uint64_t v);

}  // namespace streetmaps::util
