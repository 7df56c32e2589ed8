// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "streetmaps/domain/types.hpp"
#include "streetmaps/ingest/raw_record.hpp"

namespace streetmaps::ingest {

/// Attributes annotators fill in for a street (the street name is the key).
enum class AnnotatedField {
  district,
  denomination,
  honoree,
  gender,
  occupation,
  country,
  dob,
  dod,
  honoree_url,
  image_url,
};

inline constexpr std::size_t kAnnotatedFieldCount = 10;

/// Column name of `field` in annotated and canonical CSV files.
std::string_view column_name(AnnotatedField field);

/// All annotator answers for one street. Blank answers are not stored, so an
/// empty list means nobody annotated that field.
struct AnnotationSet {
  std::string street_name;
  std::optional<std::string> city;
  std::vector<std::string> annotators;
  std::array<std::vector<std::string>, kAnnotatedFieldCount> values;
  std::string source_url;
  std::string retrieved_at;

  std::vector<std::string>& at(AnnotatedField f) { return values[static_cast<std::size_t>(f)]; }
  const std::vector<std::string>& at(AnnotatedField f) const {
    return values[static_cast<std::size_t>(f)];
  }
};

struct Resolution {
  RawRecord record;
  /// Column names of fields whose top answers tied; left unset for a human.
  std::vector<std::string> review_flags;
};

/// Per field, adopts the unique most frequent answer, comparing answers
/// case- and whitespace-insensitively (the first-seen spelling is kept).
/// A tie for the top count adopts nothing and flags the field.
Resolution resolve_conflicts(const AnnotationSet& annotations);

using ImportResult = std::variant<std::vector<RawRecord>, std::vector<AnnotationSet>>;

struct ImportOptions {
  /// Applied when the file has no `city` column or the cell is blank.
  std::optional<CityId> default_city;
  Clock clock = system_clock();
};

/// Curated files (Source::curated): one row per street, required columns
/// `streetname,honoree`. Annotated files (Source::annotated_csv): one row per
/// (street, annotator), required columns `streetname,annotator,honoree`;
/// rows are grouped by city and case-folded street name in first-seen order.
/// Other columns use the canonical names (district, denomination, ...).
///
/// Throws SchemaMismatch, EmptyFile, or IoError.
ImportResult import_annotated_csv(const std::filesystem::path& file, Source source,
                                  const ImportOptions& options = {});

ImportResult import_annotated_csv_text(std::string_view text, Source source,
                                       const std::string& source_url,
                                       const ImportOptions& options = {});

}  // namespace streetmaps::ingest
