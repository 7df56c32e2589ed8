// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "streetmaps/store/snapshot.hpp"

namespace streetmaps::store {

/// A snapshot database is a directory holding features.geojson (canonical
/// serialization, record_id order) and manifest.json (counts and checksum).
inline constexpr std::string_view kFeaturesFile = "features.geojson";
inline constexpr std::string_view kManifestFile = "manifest.json";

/// Validates `geojson` and replaces the database content. The previous
/// content stays in place when validation fails.
std::shared_ptr<const Snapshot> save_database(const std::filesystem::path& db, std::string_view geojson);

/// Throws IoError when the directory holds no database and InvalidSnapshot
/// when the files disagree with the manifest.
std::shared_ptr<const Snapshot> open_database(const std::filesystem::path& db);

enum class ExportFormat { csv, geojson };

/// ".csv" means canonical CSV; ".geojson" and ".json" mean GeoJSON.
std::optional<ExportFormat> export_format_for(const std::filesystem::path& out);

/// One city's features (every city when `city` is empty), record_id order.
std::string export_features(const Snapshot& snapshot, std::optional<CityId> city, ExportFormat format);

}  // namespace streetmaps::store
