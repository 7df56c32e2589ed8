// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/ingest/translate.hpp"

#include "streetmaps/domain/errors.hpp"
#include "streetmaps/util/csv.hpp"
#include "streetmaps/util/text.hpp"

namespace streetmaps::data {
extern const std::string_view de_en_dictionary_csv;
}

namespace streetmaps::ingest {

DictionaryTranslator::DictionaryTranslator(std::string_view csv) {
  util::CsvTable t(csv);
  for (const auto& row : t.rows()) {
    if (row.size() < 2) continue;
    auto key = util::fold_key(row[0]);
    if (!key.empty()) entries_.emplace(std::move(key), util::collapse_whitespace(row[1]));
  }
}

const DictionaryTranslator& DictionaryTranslator::bundled() {
  static const DictionaryTranslator instance(data::de_en_dictionary_csv);
  return instance;
}

std::string DictionaryTranslator::translate(std::string_view text) const {
  auto phrase = util::fold_key(text);
  if (auto it = entries_.find(phrase); it != entries_.end()) return it->second;

  // Word by word, keeping separators and unknown words as they are.
  std::string out;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    auto it = entries_.find(util::casefold(word));
    out += it != entries_.end() ? it->second : word;
    word.clear();
  };
  for (char c : text) {
    bool sep = c == ' ' || c == ',' || c == ';' || c == '/' || c == '(' || c == ')';
    if (sep) {
      flush();
      out.push_back(c);
    } else {
      word.push_back(c);
    }
  }
  flush();
  return out;
}

RawRecord translate_fields(const RawRecord& record, const Translator& translator) {
  RawRecord out = record;
  try {
    if (record.occupation_raw) out.occupation_raw = translator.translate(*record.occupation_raw);
    if (record.district) out.district = translator.translate(*record.district);
  } catch (const TranslationFailed& e) {
    RawRecord untouched = record;
    untouched.warnings.push_back(std::string("translation failed: ") + e.what());
    return untouched;
  }
  return out;
}

}  // namespace streetmaps::ingest
