// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/ingest/http.hpp"

#include <httplib.h>

#include <thread>

#include "streetmaps/domain/errors.hpp"
#include "streetmaps/util/files.hpp"
#include "streetmaps/util/text.hpp"

namespace streetmaps::ingest {

Url split_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw SourceUnavailable("not a URL: " + url);
  auto scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw SourceUnavailable("unsupported scheme: " + url);
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

std::string http_get(const std::string& url, const HttpHeaders& headers, const RetryPolicy& retry) {
  auto [origin, path] = split_url(url);
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (origin.starts_with("https://"))
    throw SourceUnavailable("built without TLS support, cannot fetch " + url);
#endif
  httplib::Client client(origin);
  client.set_connection_timeout(10);
  client.set_read_timeout(60);
  client.set_follow_location(true);

  httplib::Headers h(headers.begin(), headers.end());
  std::string last_error;
  auto backoff = retry.initial_backoff;
  int attempts = std::max(1, retry.attempts);
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    auto res = client.Get(path, h);
    if (res) {
      if (res->status >= 200 && res->status < 300) return res->body;
      last_error = "HTTP " + std::to_string(res->status);
      bool retryable = res->status == 429 || res->status >= 500;
      if (!retryable) break;
    } else {
      last_error = httplib::to_string(res.error());
    }
    if (attempt < attempts) {
      std::this_thread::sleep_for(backoff);
      backoff = std::chrono::milliseconds(
          static_cast<long long>(static_cast<double>(backoff.count()) * retry.multiplier));
    }
  }
  throw SourceUnavailable("GET " + url + " failed: " + last_error);
}

Crawler::Crawler(Options options) : options_(std::move(options)) {}

std::filesystem::path Crawler::cache_path(const std::string& url) const {
  return options_.cache_dir / (util::hex64(util::fnv1a64(url)) + ".html");
}

std::string Crawler::get(const std::string& url) {
  std::lock_guard lock(mutex_);
  if (!options_.cache_dir.empty()) {
    auto p = cache_path(url);
    if (std::filesystem::exists(p)) return util::read_file(p);
  }
  if (any_request_) {
    auto next = last_request_ + options_.min_delay;
    auto now = std::chrono::steady_clock::now();
    if (now < next) std::this_thread::sleep_for(next - now);
  }
  any_request_ = true;
  last_request_ = std::chrono::steady_clock::now();
  ++requests_;
  auto body = http_get(url, {{"User-Agent", options_.user_agent}}, options_.retry);
  if (!options_.cache_dir.empty()) util::write_file_atomic(cache_path(url), body);
  return body;
}

}  // namespace streetmaps::ingest
