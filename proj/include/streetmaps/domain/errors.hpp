// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace streetmaps {

/// Root of every error this project throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// ingest
class SourceUnavailable : public Error {
 public:
  using Error::Error;
};
class MalformedResponse : public Error {
 public:
  using Error::Error;
};
class NotAStreetPage : public Error {
 public:
  using Error::Error;
};
class SchemaMismatch : public Error {
 public:
  SchemaMismatch(const std::string& what, std::vector<std::string> missing)
      : Error(what), missing_columns(std::move(missing)) {}
  std::vector<std::string> missing_columns;
};
class EmptyFile : public Error {
 public:
  using Error::Error;
};
class TranslationFailed : public Error {
 public:
  using Error::Error;
};

// geomatch
class EmptyGeometry : public Error {
 public:
  using Error::Error;
};

// store
class InvalidSnapshot : public Error {
 public:
  InvalidSnapshot(const std::string& what, std::vector<std::string> diag)
      : Error(what), diagnostics(std::move(diag)) {}
  std::vector<std::string> diagnostics;
};
class UnknownCity : public Error {
 public:
  using Error::Error;
};
class NoMatch : public Error {
 public:
  using Error::Error;
};
class InvalidFilter : public Error {
 public:
  InvalidFilter(std::string field_name, const std::string& what)
      : Error(what), field(std::move(field_name)) {}
  std::string field;
};

}  // namespace streetmaps
