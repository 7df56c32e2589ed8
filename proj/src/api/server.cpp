// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/api/server.hpp"

#include <httplib.h>
#include <zlib.h>

#include "streetmaps/domain/errors.hpp"
#include "streetmaps/util/text.hpp"

namespace streetmaps::api {

std::string gzip_compress(std::string_view data) {
  z_stream zs{};
  if (deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, 15 + 16, 8, Z_DEFAULT_STRATEGY) != Z_OK)
    throw Error("deflateInit2 failed");
  std::string out(deflateBound(&zs, static_cast<uLong>(data.size())), '\0');
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  int rc = deflate(&zs, Z_FINISH);
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) throw Error("deflate failed");
  out.resize(zs.total_out);
  return out;
}

struct HttpServer::Impl {
  const Service& service;
  httplib::Server server;

  explicit Impl(const Service& s) : service(s) {}

  void serve(const httplib::Request& req, httplib::Response& res) {
    Request request;
    request.method = req.method;
    request.path = req.path;
    for (const auto& [k, v] : req.params) request.params[k] = v;
    for (const auto& [k, v] : req.headers) request.headers[util::casefold(k)] = v;

    auto response = service.handle(request);
    res.status = response.status;
    for (const auto& [k, v] : response.headers) res.set_header(k, v);
    if (response.status == 204 || response.body.empty()) return;

    auto body = std::move(response.body);
    if (response.content_type == "application/geo+json" &&
        req.get_header_value("Accept-Encoding").find("gzip") != std::string::npos) {
      body = gzip_compress(body);
      res.set_header("Content-Encoding", "gzip");
      res.set_header("Vary", res.has_header("Vary") ? "Origin, Accept-Encoding" : "Accept-Encoding");
    }
    res.set_content(std::move(body), response.content_type);
  }
};

HttpServer::HttpServer(const Service& service) : impl_(std::make_unique<Impl>(service)) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) { impl_->serve(req, res); };
  impl_->server.Get("/cities(/.*)?", handler);
  impl_->server.Options("/cities(/.*)?", handler);
  if (!service.config().static_dir.empty())
    impl_->server.set_mount_point("/", service.config().static_dir.string());
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw IoError("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::wait_until_ready() { impl_->server.wait_until_ready(); }

void HttpServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

}  // namespace streetmaps::api
