// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/store/database.hpp"

#include <json.hpp>

#include "streetmaps/domain/errors.hpp"
#include "streetmaps/domain/record_csv.hpp"
#include "streetmaps/util/files.hpp"
#include "streetmaps/util/text.hpp"

namespace streetmaps::store {

namespace fs = std::filesystem;

namespace {

constexpr int kFormatVersion = 1;

std::vector<std::size_t> positions_of(const Snapshot& snapshot, std::optional<CityId> city) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < snapshot.size(); ++i)
    if (!city || snapshot.feature(i).record.city == *city) out.push_back(i);
  return out;
}

}  // namespace

std::shared_ptr<const Snapshot> save_database(const fs::path& db, std::string_view geojson) {
  auto snapshot = Snapshot::load(geojson);
  auto canonical = snapshot->to_geojson(positions_of(*snapshot, std::nullopt));

  nlohmann::ordered_json manifest;
  manifest["format_version"] = kFormatVersion;
  manifest["features"] = snapshot->size();
  auto cities = nlohmann::ordered_json::object();
  for (auto city : all_values<CityId>()) cities[std::string(to_string(city))] = snapshot->count(city);
  manifest["cities"] = std::move(cities);
  manifest["checksum"] = util::hex64(util::fnv1a64(canonical));

  util::write_file_atomic(db / kFeaturesFile, canonical);
  util::write_file_atomic(db / kManifestFile, manifest.dump(2) + "\n");
  return snapshot;
}

std::shared_ptr<const Snapshot> open_database(const fs::path& db) {
  if (!fs::exists(db / kManifestFile) || !fs::exists(db / kFeaturesFile))
    throw IoError("no snapshot database at " + db.string());
  auto text = util::read_file(db / kFeaturesFile);
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(util::read_file(db / kManifestFile));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidSnapshot("manifest is not JSON", {e.what()});
  }
  if (manifest.value("format_version", 0) != kFormatVersion)
    throw InvalidSnapshot("unsupported database format", {"manifest: format_version"});
  if (manifest.value("checksum", "") != util::hex64(util::fnv1a64(text)))
    throw InvalidSnapshot("features file does not match its manifest", {"manifest: checksum"});
  auto snapshot = Snapshot::load(text);
  if (manifest.value("features", std::size_t{0}) != snapshot->size())
    throw InvalidSnapshot("features file does not match its manifest", {"manifest: features"});
  return snapshot;
}

std::optional<ExportFormat> export_format_for(const fs::path& out) {
  auto ext = util::casefold(out.extension().string());
  if (ext == ".csv") return ExportFormat::csv;
  if (ext == ".geojson" || ext == ".json") return ExportFormat::geojson;
  return std::nullopt;
}

std::string export_features(const Snapshot& snapshot, std::optional<CityId> city, ExportFormat format) {
  auto positions = positions_of(snapshot, city);
  if (format == ExportFormat::geojson) return snapshot.to_geojson(positions);
  std::vector<StreetRecord> records;
  records.reserve(positions.size());
  for (auto i : positions) records.push_back(snapshot.feature(i).record);
  return write_records_csv(records);
}

}  // namespace streetmaps::store
