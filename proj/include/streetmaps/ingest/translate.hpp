// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "streetmaps/ingest/raw_record.hpp"

namespace streetmaps::ingest {

/// Text in, text out. Implementations throw TranslationFailed.
class Translator {
 public:
  virtual ~Translator() = default;
  virtual std::string translate(std::string_view text) const = 0;
};

class IdentityTranslator final : public Translator {
 public:
  std::string translate(std::string_view text) const override { return std::string(text); }
};

/// Offline German-to-English lookup. Whole-phrase matches win; otherwise each
/// word found in the dictionary is replaced and the rest is kept verbatim.
/// Lookups are case-insensitive.
class DictionaryTranslator final : public Translator {
 public:
  /// Parses a two-column CSV (german,english).
  explicit DictionaryTranslator(std::string_view csv);

  /// The bundled dictionary (data/de_en_dictionary.csv).
  static const DictionaryTranslator& bundled();

  std::string translate(std::string_view text) const override;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

/// Passes occupation_raw and district through `translator`. Names are never
/// translated. On TranslationFailed the record is returned untranslated with
/// a warning appended.
RawRecord translate_fields(const RawRecord& record, const Translator& translator);

}  // namespace streetmaps::ingest
