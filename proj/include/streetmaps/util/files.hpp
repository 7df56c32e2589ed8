// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace streetmaps::util {

/// Reads a whole file; throws IoError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes via a sibling temp file and rename, so readers never observe a
/// half-written file. Creates parent directories.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace streetmaps::util
