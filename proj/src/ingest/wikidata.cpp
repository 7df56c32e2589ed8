// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/ingest/wikidata.hpp"

#include <httplib.h>

#include <map>
#include <json.hpp>

#include "streetmaps/domain/city.hpp"
#include "streetmaps/domain/errors.hpp"

namespace streetmaps::ingest {

using nlohmann::json;

std::string street_eponym_query(std::string_view city_entity) {
  std::string q = R"(SELECT ?street ?streetLabel ?eponym ?eponymLabel ?eponymClass ?districtLabel
       ?inception ?genderLabel ?occupationLabel ?dob ?dod ?countryLabel ?article ?image WHERE {
  ?street wdt:P31/wdt:P279* wd:Q79007 ;
          wdt:P131+ wd:)";
  q += city_entity;
  q += R"( ;
          wdt:P138 ?eponym .
  ?eponym wdt:P31 ?eponymClass .
  OPTIONAL { ?street wdt:P131 ?district . }
  OPTIONAL { ?street wdt:P571 ?inception . }
  OPTIONAL { ?eponym wdt:P21 ?gender . }
  OPTIONAL { ?eponym wdt:P106 ?occupation . }
  OPTIONAL { ?eponym wdt:P569 ?dob . }
  OPTIONAL { ?eponym wdt:P570 ?dod . }
  OPTIONAL { ?eponym wdt:P27 ?country . }
  OPTIONAL { ?eponym wdt:P18 ?image . }
  OPTIONAL { ?article schema:about ?eponym ; schema:isPartOf <https://en.wikipedia.org/> . }
  SERVICE wikibase:label { bd:serviceParam wikibase:language "en,fr,de". }
}
ORDER BY ?street)";
  return q;
}

namespace {

// Value of `var` in one binding, if bound.
std::optional<std::string> bound(const json& binding, const char* var) {
  auto it = binding.find(var);
  if (it == binding.end()) return std::nullopt;
  if (!it->is_object() || !it->contains("value") || !(*it)["value"].is_string())
    throw MalformedResponse(std::string("binding for ?") + var + " has no string value");
  return present((*it)["value"].get<std::string>());
}

void fill(std::optional<std::string>& field, std::optional<std::string> value) {
  if (!field && value) field = std::move(value);
}

}  // namespace

std::vector<RawRecord> parse_street_bindings(std::string_view results_json, CityId city,
                                             const Clock& clock) {
  json doc;
  try {
    doc = json::parse(results_json);
  } catch (const json::parse_error& e) {
    throw MalformedResponse(std::string("SPARQL results are not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("head") || !doc["head"].is_object() ||
      !doc.contains("results") || !doc["results"].is_object() ||
      !doc["results"].contains("bindings") || !doc["results"]["bindings"].is_array())
    throw MalformedResponse("document is not a SPARQL JSON results object");

  const std::string stamp = clock();
  std::vector<RawRecord> out;
  std::map<std::string, std::size_t> by_street;
  for (const auto& b : doc["results"]["bindings"]) {
    if (!b.is_object()) throw MalformedResponse("binding is not an object");
    auto street = bound(b, "street");
    auto label = bound(b, "streetLabel");
    if (!street || !label) throw MalformedResponse("binding lacks ?street or ?streetLabel");
    if (bound(b, "eponymClass").value_or("") != kPersonClassIri) continue;

    auto [it, inserted] = by_street.try_emplace(*street, out.size());
    if (inserted) {
      RawRecord r;
      r.street_name = *label;
      r.city = std::string(to_string(city));
      r.source = Source::wikidata;
      r.source_url = *street;
      r.retrieved_at = stamp;
      out.push_back(std::move(r));
    }
    RawRecord& r = out[it->second];
    fill(r.district, bound(b, "districtLabel"));
    fill(r.denomination, bound(b, "inception"));
    fill(r.honoree_name, bound(b, "eponymLabel"));
    fill(r.gender, bound(b, "genderLabel"));
    fill(r.occupation_raw, bound(b, "occupationLabel"));
    fill(r.birth, bound(b, "dob"));
    fill(r.death, bound(b, "dod"));
    fill(r.country, bound(b, "countryLabel"));
    fill(r.honoree_url, bound(b, "article"));
    fill(r.image_url, bound(b, "image"));
  }
  return out;
}

std::vector<RawRecord> fetch_wikidata_streets(CityId city, const std::string& endpoint,
                                              const WikidataOptions& options) {
  std::string entity = options.city_entity;
  if (entity.empty()) {
    for (const auto& s : default_city_config(city).sources)
      if (s.kind == Source::wikidata) entity = s.entity;
  }
  if (entity.empty())
    throw SourceUnavailable("no knowledge-base entity configured for " +
                            std::string(to_string(city)));
  httplib::Params params{{"query", street_eponym_query(entity)}, {"format", "json"}};
  std::string url = endpoint;
  url += endpoint.find('?') == std::string::npos ? '?' : '&';
  url += httplib::detail::params_to_query_str(params);
  auto body = http_get(url,
                       {{"Accept", "application/sparql-results+json"},
                        {"User-Agent", "streetmaps/1.0 (street eponym research)"}},
                       options.retry);
  return parse_street_bindings(body, city, options.clock);
}

}  // namespace streetmaps::ingest
