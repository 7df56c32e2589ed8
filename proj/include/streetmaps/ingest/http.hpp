// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace streetmaps::ingest {

struct RetryPolicy {
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{500};
  double multiplier = 2.0;
};

/// scheme://host[:port] plus the path-and-query remainder.
struct Url {
  std::string origin;
  std::string path;
};

/// Throws SourceUnavailable for anything that is not an http(s) URL.
Url split_url(const std::string& url);

using HttpHeaders = std::multimap<std::string, std::string>;

/// GET with bounded retries and exponential backoff. Connection failures,
/// 429 and 5xx are retried; other non-2xx statuses fail immediately.
/// Throws SourceUnavailable once the policy is exhausted.
std::string http_get(const std::string& url, const HttpHeaders& headers,
                     const RetryPolicy& retry = {});

/// Rate-limited page fetcher with an on-disk cache keyed by URL, so an
/// interrupted crawl resumes without refetching. One instance serializes
/// its own requests.
class Crawler {
 public:
  struct Options {
    std::chrono::milliseconds min_delay{1000};
    std::filesystem::path cache_dir;  // empty disables caching
    RetryPolicy retry;
    std::string user_agent = "streetmaps-crawler/1.0";
  };

  explicit Crawler(Options options);

  std::string get(const std::string& url);

  std::size_t network_requests() const { return requests_; }

 private:
  std::filesystem::path cache_path(const std::string& url) const;

  Options options_;
  std::mutex mutex_;
  std::chrono::steady_clock::time_point last_request_{};
  bool any_request_ = false;
  std::size_t requests_ = 0;
};

}  // namespace streetmaps::ingest
