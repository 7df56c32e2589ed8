// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/geomatch/geojson.hpp"

#include "streetmaps/domain/errors.hpp"

namespace streetmaps::geomatch {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json position(LonLat p) { return ordered_json::array({p.lon, p.lat}); }

ordered_json line_coords(const LineString& line) {
  auto arr = ordered_json::array();
  for (auto p : line) arr.push_back(position(p));
  return arr;
}

LonLat parse_position(const json& j) {
  if (!j.is_array() || j.size() < 2 || j.size() > 3 || !j[0].is_number() || !j[1].is_number())
    throw Error("position must be [lon, lat] numbers");
  LonLat p{j[0].get<double>(), j[1].get<double>()};
  if (!in_wgs84_range(p)) throw Error("position outside WGS84 range");
  return p;
}

LineString parse_line(const json& j) {
  if (!j.is_array()) throw Error("line coordinates must be an array");
  LineString line;
  for (const auto& p : j) line.push_back(parse_position(p));
  if (line.size() < 2) throw Error("a LineString needs two or more positions");
  return line;
}

ordered_json opt_text(const std::optional<std::string>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}
ordered_json opt_int(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

const json& prop(const json& props, const char* key) {
  auto it = props.find(key);
  if (it == props.end()) throw Error(std::string("missing property '") + key + "'");
  return *it;
}

std::string text_prop(const json& props, const char* key) {
  const auto& v = prop(props, key);
  if (!v.is_string()) throw Error(std::string("property '") + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::string> opt_text_prop(const json& props, const char* key) {
  auto it = props.find(key);
  if (it == props.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw Error(std::string("property '") + key + "' must be a string or null");
  return it->get<std::string>();
}

std::optional<int> opt_int_prop(const json& props, const char* key) {
  auto it = props.find(key);
  if (it == props.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) throw Error(std::string("property '") + key + "' must be an integer or null");
  return it->get<int>();
}

template <class E>
E enum_prop(const json& props, const char* key) {
  auto s = text_prop(props, key);
  auto v = parse_enum<E>(s);
  if (!v) throw Error(std::string("property '") + key + "' has unexpected value '" + s + "'");
  return *v;
}

}  // namespace

ordered_json lines_to_geojson(const MultiLineString& geometry) {
  ordered_json g;
  if (geometry.size() == 1) {
    g["type"] = "LineString";
    g["coordinates"] = line_coords(geometry.front());
  } else {
    g["type"] = "MultiLineString";
    auto arr = ordered_json::array();
    for (const auto& line : geometry) arr.push_back(line_coords(line));
    g["coordinates"] = std::move(arr);
  }
  return g;
}

MultiLineString lines_from_geojson(const json& g) {
  if (!g.is_object() || !g.contains("type") || !g.contains("coordinates"))
    throw Error("geometry must have type and coordinates");
  auto type = g["type"].is_string() ? g["type"].get<std::string>() : "";
  const auto& c = g["coordinates"];
  if (type == "LineString") return {parse_line(c)};
  if (type == "MultiLineString") {
    if (!c.is_array() || c.empty()) throw Error("MultiLineString needs at least one line");
    MultiLineString out;
    for (const auto& line : c) out.push_back(parse_line(line));
    return out;
  }
  throw Error("unsupported geometry type '" + type + "'");
}

ordered_json feature_to_json(const StreetFeature& f) {
  const auto& r = f.record;
  ordered_json props;
  props["record_id"] = r.record_id;
  props["streetname"] = r.street_name;
  props["district"] = opt_text(r.district);
  props["denomination"] = opt_int(r.denomination_year);
  props["honoree"] = r.honoree_name;
  props["gender"] = to_string(r.gender);
  props["occupation"] = r.occupation_raw;
  props["occupation_group"] = to_string(r.occupation_group);
  props["country"] = r.country.str();
  props["dob"] = opt_int(r.birth_year);
  props["dod"] = opt_int(r.death_year);
  props["honoree_url"] = opt_text(r.honoree_url);
  props["image_url"] = opt_text(r.image_url);
  props["source"] = to_string(r.source);
  props["city"] = streetmaps::to_string(r.city);
  props["representative_point"] =
      f.representative_point ? position(*f.representative_point) : ordered_json(nullptr);
  props["match_method"] = to_string(f.match_method);
  props["way_ids"] = f.way_ids;

  ordered_json feature;
  feature["type"] = "Feature";
  feature["id"] = r.record_id;
  feature["geometry"] = f.geometry.empty() ? ordered_json(nullptr) : lines_to_geojson(f.geometry);
  feature["properties"] = std::move(props);
  return feature;
}

StreetFeature feature_from_json(const json& j) {
  if (!j.is_object() || j.value("type", "") != "Feature") throw Error("not a GeoJSON Feature");
  if (!j.contains("properties") || !j["properties"].is_object()) throw Error("feature has no properties object");
  const auto& p = j["properties"];

  StreetFeature f;
  auto& r = f.record;
  r.record_id = text_prop(p, "record_id");
  r.street_name = text_prop(p, "streetname");
  r.district = opt_text_prop(p, "district");
  r.denomination_year = opt_int_prop(p, "denomination");
  r.honoree_name = text_prop(p, "honoree");
  r.gender = enum_prop<Gender>(p, "gender");
  r.occupation_raw = text_prop(p, "occupation");
  r.occupation_group = enum_prop<OccupationGroup>(p, "occupation_group");
  auto country = text_prop(p, "country");
  if (country != "unknown") {
    auto code = CountryCode::from_alpha2(country);
    if (!code) throw Error("property 'country' is not an ISO alpha-2 code: '" + country + "'");
    r.country = *code;
  }
  r.birth_year = opt_int_prop(p, "dob");
  r.death_year = opt_int_prop(p, "dod");
  r.honoree_url = opt_text_prop(p, "honoree_url");
  r.image_url = opt_text_prop(p, "image_url");
  r.source = enum_prop<Source>(p, "source");
  r.city = enum_prop<CityId>(p, "city");

  auto method = parse_match_method(text_prop(p, "match_method"));
  if (!method) throw Error("property 'match_method' has unexpected value");
  f.match_method = *method;
  if (auto it = p.find("way_ids"); it != p.end() && !it->is_null()) {
    if (!it->is_array()) throw Error("property 'way_ids' must be an array");
    for (const auto& w : *it) {
      if (!w.is_string()) throw Error("property 'way_ids' must hold strings");
      f.way_ids.push_back(w.get<std::string>());
    }
  }
  if (auto it = p.find("representative_point"); it != p.end() && !it->is_null())
    f.representative_point = parse_position(*it);

  if (j.contains("geometry") && !j["geometry"].is_null()) f.geometry = lines_from_geojson(j["geometry"]);
  return f;
}

std::string write_feature_collection(const std::vector<StreetFeature>& features) {
  ordered_json fc;
  fc["type"] = "FeatureCollection";
  auto arr = ordered_json::array();
  for (const auto& f : features) arr.push_back(feature_to_json(f));
  fc["features"] = std::move(arr);
  return fc.dump();
}

}  // namespace streetmaps::geomatch
