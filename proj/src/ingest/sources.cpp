// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/ingest/sources.hpp"

#include <algorithm>

#include "streetmaps/domain/errors.hpp"
#include "streetmaps/ingest/annotations.hpp"
#include "streetmaps/ingest/translate.hpp"
#include "streetmaps/ingest/wiki_page.hpp"
#include "streetmaps/ingest/wikidata.hpp"
#include "streetmaps/util/csv.hpp"
#include "streetmaps/util/files.hpp"
#include "streetmaps/util/text.hpp"

namespace streetmaps::ingest {

namespace {

std::string label_of(const SourceSpec& spec) {
  return spec.input_label.empty() ? spec.input.generic_string() : spec.input_label;
}

IngestResult run_wiki_pages(const SourceSpec& spec) {
  IngestResult out;
  std::vector<std::pair<std::string, std::string>> pages;  // (url or label, html)

  if (std::filesystem::is_directory(spec.input)) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(spec.input))
      if (e.is_regular_file() && (e.path().extension() == ".html" || e.path().extension() == ".htm"))
        files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files)
      pages.emplace_back(label_of(spec) + "/" + f.filename().generic_string(), util::read_file(f));
  } else {
    Crawler crawler({spec.min_delay, spec.cache_dir, spec.retry});
    for (const auto& line : util::split(util::read_file(spec.input), '\n')) {
      auto url = util::trim(line);
      if (url.empty() || url.front() == '#') continue;
      pages.emplace_back(std::string(url), crawler.get(std::string(url)));
    }
  }

  for (const auto& [url, html] : pages) {
    try {
      auto r = parse_wiki_street_page(html, url, spec.clock);
      if (!r.city) r.city = std::string(to_string(spec.city));
      if (spec.translate) r = translate_fields(r, DictionaryTranslator::bundled());
      out.records.push_back(std::move(r));
    } catch (const NotAStreetPage& e) {
      out.notes.push_back(std::string("skipped page: ") + e.what());
    }
  }
  return out;
}

IngestResult run_csv(const SourceSpec& spec) {
  IngestResult out;
  auto text = util::read_file(spec.input);
  if (util::trim(text).empty()) throw EmptyFile("empty file " + label_of(spec));
  ImportOptions options{spec.city, spec.clock};
  auto imported = import_annotated_csv_text(text, spec.kind, label_of(spec), options);
  if (auto* records = std::get_if<std::vector<RawRecord>>(&imported)) {
    out.records = std::move(*records);
  } else {
    for (const auto& set : std::get<std::vector<AnnotationSet>>(imported)) {
      auto res = resolve_conflicts(set);
      for (const auto& f : res.review_flags) {
        res.record.warnings.push_back("needs review: " + f);
        out.notes.push_back("needs review: " + set.street_name + " / " + f);
      }
      out.records.push_back(std::move(res.record));
    }
  }
  if (spec.translate)
    for (auto& r : out.records) r = translate_fields(r, DictionaryTranslator::bundled());
  return out;
}

}  // namespace

IngestResult run_source(const SourceSpec& spec) {
  switch (spec.kind) {
    case Source::wikidata: {
      IngestResult out;
      if (!spec.endpoint.empty()) {
        WikidataOptions options{spec.entity, spec.retry, spec.clock};
        out.records = fetch_wikidata_streets(spec.city, spec.endpoint, options);
      } else {
        out.records = parse_street_bindings(util::read_file(spec.input), spec.city, spec.clock);
      }
      if (spec.translate)
        for (auto& r : out.records) r = translate_fields(r, DictionaryTranslator::bundled());
      return out;
    }
    case Source::wikihistory:
      return run_wiki_pages(spec);
    case Source::annotated_csv:
    case Source::curated:
      return run_csv(spec);
  }
  return {};
}

bool looks_annotated(const std::filesystem::path& csv) {
  auto text = util::read_file(csv);
  auto first_line = text.substr(0, text.find('\n'));
  util::CsvTable t(first_line);
  return t.has_column("annotator");
}

}  // namespace streetmaps::ingest
