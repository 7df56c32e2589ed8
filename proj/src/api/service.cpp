// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/api/service.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <json.hpp>

#include "streetmaps/domain/errors.hpp"
#include "streetmaps/util/files.hpp"
#include "streetmaps/util/text.hpp"

namespace streetmaps::api {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::string_view kJson = "application/json";
constexpr std::string_view kGeoJson = "application/geo+json";

Response json_response(int status, const ordered_json& body) {
  Response r;
  r.status = status;
  r.content_type = kJson;
  r.body = body.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
  return r;
}

Response error(int status, std::string_view code, std::optional<std::string> field, std::string_view message) {
  ordered_json body;
  body["code"] = code;
  body["field"] = field ? ordered_json(*field) : ordered_json(nullptr);
  body["message"] = message;
  return json_response(status, body);
}

template <class Int>
Int parse_int(const std::map<std::string, std::string>& params, const std::string& key) {
  const auto& text = params.at(key);
  Int value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    throw InvalidFilter(key, key + " must be an integer, got '" + text + "'");
  return value;
}

ordered_json position(LonLat p) { return ordered_json::array({p.lon, p.lat}); }

}  // namespace

ServiceConfig parse_service_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("config is not JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("config must be a JSON object");
  ServiceConfig config;
  if (doc.contains("cities")) {
    if (!doc["cities"].is_array()) throw Error("config: cities must be an array of city ids");
    config.cities.clear();
    for (const auto& c : doc["cities"]) {
      auto id = c.is_string() ? parse_enum<CityId>(c.get<std::string>()) : std::nullopt;
      if (!id) throw UnknownCity("config: unknown city " + c.dump());
      config.cities.push_back(default_city_config(*id));
    }
  }
  if (doc.contains("cors_origins")) {
    if (!doc["cors_origins"].is_array()) throw Error("config: cors_origins must be an array of strings");
    for (const auto& o : doc["cors_origins"]) {
      if (!o.is_string()) throw Error("config: cors_origins must be an array of strings");
      config.cors_origins.push_back(o.get<std::string>());
    }
  }
  if (doc.contains("static_dir")) {
    if (!doc["static_dir"].is_string()) throw Error("config: static_dir must be a string");
    std::filesystem::path dir = doc["static_dir"].get<std::string>();
    config.static_dir = dir.is_relative() && !base_dir.empty() ? base_dir / dir : dir;
  }
  return config;
}

ServiceConfig load_service_config(const std::filesystem::path& file) {
  return parse_service_config(util::read_file(file), file.parent_path());
}

store::QueryFilter parse_filter(CityId city, const std::map<std::string, std::string>& params) {
  store::QueryFilter filter;
  filter.city = city;
  if (auto it = params.find("theme"); it != params.end()) {
    auto theme = parse_enum<ThemeLayer>(it->second);
    if (!theme) throw InvalidFilter("theme", "unknown theme '" + it->second + "'");
    filter.theme = *theme;
  }
  bool has_from = params.contains("from");
  bool has_to = params.contains("to");
  if (has_from || has_to) {
    store::YearInterval range{INT_MIN, INT_MAX};
    if (has_from) range.from = parse_int<int>(params, "from");
    if (has_to) range.to = parse_int<int>(params, "to");
    filter.year_range = range;
  }
  if (auto it = params.find("tags"); it != params.end() && !util::trim(it->second).empty()) {
    std::set<std::string> tags;
    for (const auto& part : util::split(it->second, ',')) {
      auto tag = std::string(util::trim(part));
      if (!tag.empty()) tags.insert(tag);
    }
    filter.tags = std::move(tags);
  }
  store::check_filter(filter);
  return filter;
}

Service::Service(ServiceConfig config, const store::SnapshotStore& snapshots)
    : config_(std::move(config)), snapshots_(snapshots) {}

std::optional<CityId> Service::configured_city(std::string_view id) const {
  auto city = parse_enum<CityId>(id);
  if (!city) return std::nullopt;
  for (const auto& c : config_.cities)
    if (c.city == *city) return city;
  return std::nullopt;
}

Response Service::handle(const Request& request) const {
  Response response;
  try {
    response = route(request);
  } catch (const std::exception& e) {
    response = error(500, "internal", std::nullopt, e.what());
  }
  if (auto it = request.headers.find("origin"); it != request.headers.end()) {
    const auto& allowed = config_.cors_origins;
    bool any = std::find(allowed.begin(), allowed.end(), "*") != allowed.end();
    if (any || std::find(allowed.begin(), allowed.end(), it->second) != allowed.end()) {
      response.headers["Access-Control-Allow-Origin"] = any ? "*" : it->second;
      response.headers["Access-Control-Expose-Headers"] = "X-Total-Count";
      if (!any) response.headers["Vary"] = "Origin";
    }
  }
  return response;
}

Response Service::route(const Request& request) const {
  if (request.method == "OPTIONS") {
    Response r;
    r.status = 204;
    r.headers["Access-Control-Allow-Methods"] = "GET, OPTIONS";
    return r;
  }
  if (request.method != "GET" && request.method != "HEAD")
    return error(405, "method_not_allowed", std::nullopt, "only GET is supported");

  std::vector<std::string> parts;
  for (auto& p : util::split(request.path, '/'))
    if (!p.empty()) parts.push_back(p);
  if (parts.empty() || parts[0] != "cities") return error(404, "not_found", std::nullopt, "no such endpoint");

  auto snapshot = snapshots_.current();
  if (!snapshot) return error(503, "no_snapshot", std::nullopt, "no snapshot loaded");
  if (parts.size() == 1) return cities(*snapshot);

  auto city = configured_city(parts[1]);
  if (!city) return error(404, "unknown_city", "city", "unknown city '" + parts[1] + "'");
  try {
    if (parts.size() == 3 && parts[2] == "streets") return streets(*snapshot, *city, request);
    if (parts.size() == 4 && parts[2] == "streets" && parts[3] == "random") return random(*snapshot, *city, request);
    if (parts.size() == 3 && parts[2] == "stats") return stats(*snapshot, *city, request);
  } catch (const InvalidFilter& e) {
    return error(400, "invalid_parameter", e.field, e.what());
  }
  return error(404, "not_found", std::nullopt, "no such endpoint");
}

Response Service::cities(const store::Snapshot& snapshot) const {
  auto list = ordered_json::array();
  for (const auto& c : config_.cities) {
    auto count = snapshot.count(c.city);
    if (count == 0) continue;
    ordered_json entry;
    entry["id"] = to_string(c.city);
    entry["display_name"] = c.display_name;
    entry["center"] = position(c.center);
    entry["bounding_box"] = ordered_json::array(
        {c.bounding_box.min_lon, c.bounding_box.min_lat, c.bounding_box.max_lon, c.bounding_box.max_lat});
    entry["year_range"] = ordered_json::array({c.year_range.min_year, c.year_range.max_year});
    entry["feature_count"] = count;
    list.push_back(std::move(entry));
  }
  return json_response(200, list);
}

Response Service::streets(const store::Snapshot& snapshot, CityId city, const Request& request) const {
  auto filter = parse_filter(city, request.params);
  auto hits = snapshot.query(filter);
  Response r;
  r.content_type = kGeoJson;
  r.body = snapshot.to_geojson(hits);
  r.headers["X-Total-Count"] = std::to_string(hits.size());
  return r;
}

Response Service::random(const store::Snapshot& snapshot, CityId city, const Request& request) const {
  auto filter = parse_filter(city, request.params);
  std::optional<std::uint64_t> seed;
  if (request.params.contains("seed")) seed = parse_int<std::uint64_t>(request.params, "seed");
  auto hits = snapshot.query(filter);
  if (hits.empty()) {
    Response r;
    r.status = 204;
    return r;
  }
  const auto& feature = snapshot.random_street(filter, seed);
  auto pos = static_cast<std::size_t>(&feature - snapshot.features().data());
  Response r;
  r.content_type = kGeoJson;
  r.body = snapshot.feature_json(pos);
  return r;
}

Response Service::stats(const store::Snapshot& snapshot, CityId city, const Request& request) const {
  ThemeLayer theme = ThemeLayer::occupation;
  if (auto it = request.params.find("theme"); it != request.params.end()) {
    auto parsed = parse_enum<ThemeLayer>(it->second);
    if (!parsed) throw InvalidFilter("theme", "unknown theme '" + it->second + "'");
    theme = *parsed;
  }
  auto counts = snapshot.stats(city, theme);
  std::size_t total = 0;
  auto obj = ordered_json::object();
  for (const auto& [value, n] : counts) {
    obj[value] = n;
    total += n;
  }
  ordered_json body;
  body["city"] = to_string(city);
  body["theme"] = to_string(theme);
  body["total"] = total;
  body["counts"] = std::move(obj);
  return json_response(200, body);
}

}  // namespace streetmaps::api
