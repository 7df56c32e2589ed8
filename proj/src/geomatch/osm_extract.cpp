// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/geomatch/osm_extract.hpp"

#include <json.hpp>
#include <set>

#include "streetmaps/domain/errors.hpp"
#include "streetmaps/geomatch/geojson.hpp"

namespace streetmaps::geomatch {

using nlohmann::json;

namespace {

std::optional<std::string> string_prop(const json& props, const char* key) {
  auto it = props.find(key);
  if (it == props.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) {
    auto s = it->get<std::string>();
    if (s.empty()) return std::nullopt;
    return s;
  }
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  return std::nullopt;
}

}  // namespace

OsmExtract parse_osm_extract(std::string_view geojson) {
  json doc;
  try {
    doc = json::parse(geojson);
  } catch (const json::parse_error& e) {
    throw Error(std::string("OSM extract is not JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" || !doc.contains("features") ||
      !doc["features"].is_array())
    throw Error("OSM extract must be a GeoJSON FeatureCollection");

  OsmExtract out;
  std::set<std::string> ids;
  std::size_t n = 0;
  for (const auto& f : doc["features"]) {
    ++n;
    std::string where = "OSM feature #" + std::to_string(n);
    if (!f.is_object() || !f.contains("geometry")) throw Error(where + ": not a Feature");
    json props = f.contains("properties") && f["properties"].is_object() ? f["properties"] : json::object();
    auto name = string_prop(props, "name");
    if (!name) continue;

    std::optional<std::string> id = string_prop(props, "way_id");
    if (!id) id = string_prop(props, "@id");
    if (!id && f.contains("id")) id = string_prop(f, "id");
    if (!id) throw Error(where + " (" + *name + "): no way id");

    NamedWay way;
    way.way_id = *id;
    way.name = *name;
    way.district = string_prop(props, "district");
    if (!way.district) way.district = string_prop(props, "addr:suburb");
    try {
      way.geometry = lines_from_geojson(f["geometry"]);
    } catch (const Error& e) {
      throw Error(where + " (way " + way.way_id + "): " + e.what());
    }
    if (!ids.insert(way.way_id).second) throw Error("duplicate way id " + way.way_id);
    out.ways.push_back(std::move(way));
  }
  return out;
}

}  // namespace streetmaps::geomatch
