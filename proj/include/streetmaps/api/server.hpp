// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "streetmaps/api/service.hpp"

namespace streetmaps::api {

/// gzip container around deflate; used for content types the HTTP library
/// does not compress by itself.
std::string gzip_compress(std::string_view data);

/// HTTP front end for a Service. Requests are served on a thread pool; the
/// static bundle (if configured) is mounted at "/".
class HttpServer {
 public:
  explicit HttpServer(const Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the socket; port 0 picks a free port. Returns the bound port.
  /// Throws IoError when the address is unavailable.
  int bind(const std::string& host, int port);

  /// Serves until stop(); call after bind().
  void run();
  /// Blocks until run() accepts connections.
  void wait_until_ready();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace streetmaps::api
