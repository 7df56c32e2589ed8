// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streetmaps/domain/city.hpp"
#include "streetmaps/store/snapshot.hpp"

namespace streetmaps::api {

struct ServiceConfig {
  std::vector<CityConfig> cities = default_city_configs();
  /// Origins allowed by CORS; "*" allows any.
  std::vector<std::string> cors_origins;
  /// Directory served at "/" (the web map bundle); empty disables it.
  std::filesystem::path static_dir;
};

/// Reads the JSON config file format:
///   {"cities": ["paris", ...], "cors_origins": [...], "static_dir": "..."}
/// Every key is optional. Relative static_dir paths resolve against the
/// config file's directory. Throws Error.
ServiceConfig parse_service_config(std::string_view json_text, const std::filesystem::path& base_dir = {});
ServiceConfig load_service_config(const std::filesystem::path& file);

struct Request {
  std::string method = "GET";
  std::string path;
  /// Decoded query parameters; the last value wins for repeated keys.
  std::map<std::string, std::string> params;
  std::map<std::string, std::string> headers;  // lower-case names
};

struct Response {
  int status = 200;
  std::string content_type;
  std::string body;
  std::map<std::string, std::string> headers;
};

/// The HTTP contract as a pure function of (snapshot, request). Never throws;
/// every error is a JSON body {code, field, message}.
class Service {
 public:
  Service(ServiceConfig config, const store::SnapshotStore& snapshots);

  Response handle(const Request& request) const;

  const ServiceConfig& config() const { return config_; }

 private:
  Response route(const Request& request) const;
  Response cities(const store::Snapshot& snapshot) const;
  Response streets(const store::Snapshot& snapshot, CityId city, const Request& request) const;
  Response random(const store::Snapshot& snapshot, CityId city, const Request& request) const;
  Response stats(const store::Snapshot& snapshot, CityId city, const Request& request) const;
  std::optional<CityId> configured_city(std::string_view id) const;

  ServiceConfig config_;
  const store::SnapshotStore& snapshots_;
};

/// Decodes the query string of /streets and /streets/random. Throws
/// InvalidFilter naming the offending parameter.
store::QueryFilter parse_filter(CityId city, const std::map<std::string, std::string>& params);

}  // namespace streetmaps::api
