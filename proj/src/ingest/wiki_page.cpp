// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#include "streetmaps/ingest/wiki_page.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <vector>

#include "streetmaps/domain/errors.hpp"
#include "streetmaps/ingest/http.hpp"
#include "streetmaps/util/text.hpp"

namespace streetmaps::ingest {

namespace {

// Byte-level view of one start or end tag.
struct Tag {
  std::size_t begin = 0;  // offset of '<'
  std::size_t end = 0;    // offset one past '>'
  std::string name;       // lowercase
  bool closing = false;
  std::string_view attrs;
};

char lower_ascii(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c; }

// Next tag at or after `pos`; comments are skipped.
std::optional<Tag> next_tag(std::string_view html, std::size_t pos) {
  while (true) {
    auto lt = html.find('<', pos);
    if (lt == std::string_view::npos) return std::nullopt;
    if (html.substr(lt, 4) == "<!--") {
      auto close = html.find("-->", lt + 4);
      if (close == std::string_view::npos) return std::nullopt;
      pos = close + 3;
      continue;
    }
    auto gt = html.find('>', lt + 1);
    if (gt == std::string_view::npos) return std::nullopt;
    Tag t;
    t.begin = lt;
    t.end = gt + 1;
    std::size_t i = lt + 1;
    if (i < gt && html[i] == '/') {
      t.closing = true;
      ++i;
    }
    std::size_t name_start = i;
    while (i < gt && (std::isalnum(static_cast<unsigned char>(html[i])))) ++i;
    if (i == name_start) {  // "<!DOCTYPE", "< 3" and friends
      pos = gt + 1;
      continue;
    }
    for (std::size_t k = name_start; k < i; ++k) t.name.push_back(lower_ascii(html[k]));
    t.attrs = html.substr(i, gt - i);
    return t;
  }
}

std::optional<std::string> attribute(std::string_view attrs, std::string_view name) {
  std::size_t i = 0;
  while (i < attrs.size()) {
    while (i < attrs.size() && !std::isalpha(static_cast<unsigned char>(attrs[i]))) ++i;
    std::size_t s = i;
    while (i < attrs.size() && (std::isalnum(static_cast<unsigned char>(attrs[i])) ||
                                attrs[i] == '-' || attrs[i] == '_' || attrs[i] == ':'))
      ++i;
    std::string key;
    for (std::size_t k = s; k < i; ++k) key.push_back(lower_ascii(attrs[k]));
    while (i < attrs.size() && attrs[i] == ' ') ++i;
    if (i >= attrs.size() || attrs[i] != '=') {
      if (key.empty()) ++i;
      continue;
    }
    ++i;
    while (i < attrs.size() && attrs[i] == ' ') ++i;
    std::string value;
    if (i < attrs.size() && (attrs[i] == '"' || attrs[i] == '\'')) {
      char q = attrs[i++];
      auto e = attrs.find(q, i);
      if (e == std::string_view::npos) e = attrs.size();
      value = std::string(attrs.substr(i, e - i));
      i = e + 1;
    } else {
      std::size_t vs = i;
      while (i < attrs.size() && attrs[i] != ' ' && attrs[i] != '/') ++i;
      value = std::string(attrs.substr(vs, i - vs));
    }
    if (key == name) return decode_html_entities(value);
  }
  return std::nullopt;
}

// Offset just past the element closing `open`, respecting nesting of the
// same tag name. npos when unterminated.
std::size_t element_end(std::string_view html, const Tag& open, std::size_t* inner_end) {
  int depth = 1;
  std::size_t pos = open.end;
  while (auto t = next_tag(html, pos)) {
    pos = t->end;
    if (t->name != open.name) continue;
    depth += t->closing ? -1 : 1;
    if (depth == 0) {
      if (inner_end) *inner_end = t->begin;
      return t->end;
    }
  }
  if (inner_end) *inner_end = html.size();
  return std::string_view::npos;
}

std::string text_content(std::string_view fragment) {
  std::string out;
  std::size_t pos = 0;
  while (pos < fragment.size()) {
    auto t = next_tag(fragment, pos);
    std::size_t stop = t ? t->begin : fragment.size();
    out.append(fragment.substr(pos, stop - pos));
    if (!t) break;
    if (t->name == "br" || t->name == "p" || t->name == "div" || t->name == "li") out.push_back(' ');
    if (!t->closing && (t->name == "script" || t->name == "style")) {
      auto close = element_end(fragment, *t, nullptr);
      pos = close == std::string_view::npos ? fragment.size() : close;
      continue;
    }
    pos = t->end;
  }
  return util::collapse_whitespace(decode_html_entities(out));
}

struct Cell {
  std::string text;
  std::optional<std::string> href;
  std::optional<std::string> img;
};

Cell read_cell(std::string_view inner) {
  Cell c;
  c.text = text_content(inner);
  std::size_t pos = 0;
  while (auto t = next_tag(inner, pos)) {
    pos = t->end;
    if (t->closing) continue;
    if (t->name == "a" && !c.href) c.href = attribute(t->attrs, "href");
    if (t->name == "img" && !c.img) c.img = attribute(t->attrs, "src");
  }
  return c;
}

std::vector<std::pair<std::string, Cell>> infobox_rows(std::string_view table) {
  std::vector<std::pair<std::string, Cell>> rows;
  std::size_t pos = 0;
  while (auto t = next_tag(table, pos)) {
    pos = t->end;
    if (t->closing || t->name != "tr") continue;
    std::size_t inner_end = 0;
    auto close = element_end(table, *t, &inner_end);
    auto row = table.substr(t->end, inner_end - t->end);
    std::vector<Cell> cells;
    std::size_t cpos = 0;
    while (auto c = next_tag(row, cpos)) {
      cpos = c->end;
      if (c->closing || (c->name != "th" && c->name != "td")) continue;
      std::size_t cell_inner_end = 0;
      auto cell_close = element_end(row, *c, &cell_inner_end);
      cells.push_back(read_cell(row.substr(c->end, cell_inner_end - c->end)));
      if (cell_close == std::string_view::npos) break;
      cpos = cell_close;
    }
    if (cells.size() >= 2) {
      std::string label = cells[0].text;
      while (!label.empty() && (label.back() == ':' || label.back() == ' ')) label.pop_back();
      rows.emplace_back(util::casefold(label), std::move(cells[1]));
    }
    if (close == std::string_view::npos) break;
    pos = close;
  }
  return rows;
}

enum class Field {
  street_name,
  district,
  denomination,
  honoree_name,
  gender,
  occupation,
  birth,
  death,
  country,
  honoree_url,
  image,
};

const std::map<std::string, Field, std::less<>>& label_table() {
  static const std::map<std::string, Field, std::less<>> t{
      {"name", Field::street_name},
      {"straßenname", Field::street_name},
      {"strassenname", Field::street_name},
      {"street", Field::street_name},
      {"street name", Field::street_name},
      {"bezirk", Field::district},
      {"bezirke", Field::district},
      {"district", Field::district},
      {"datum der benennung", Field::denomination},
      {"benennungsdatum", Field::denomination},
      {"benennung", Field::denomination},
      {"datum von", Field::denomination},
      {"date of naming", Field::denomination},
      {"named", Field::denomination},
      {"denomination", Field::denomination},
      {"benannt nach", Field::honoree_name},
      {"namensgeber", Field::honoree_name},
      {"namensgeberin", Field::honoree_name},
      {"named after", Field::honoree_name},
      {"honoree", Field::honoree_name},
      {"geschlecht", Field::gender},
      {"gender", Field::gender},
      {"beruf", Field::occupation},
      {"occupation", Field::occupation},
      {"profession", Field::occupation},
      {"geburtsdatum", Field::birth},
      {"geboren", Field::birth},
      {"date of birth", Field::birth},
      {"born", Field::birth},
      {"sterbedatum", Field::death},
      {"gestorben", Field::death},
      {"date of death", Field::death},
      {"died", Field::death},
      {"herkunft", Field::country},
      {"land", Field::country},
      {"nationalität", Field::country},
      {"staatsangehörigkeit", Field::country},
      {"country", Field::country},
      {"country of origin", Field::country},
      {"wikipedia", Field::honoree_url},
      {"link", Field::honoree_url},
      {"bild", Field::image},
      {"porträt", Field::image},
      {"image", Field::image},
      {"portrait", Field::image},
  };
  return t;
}

std::string resolve_link(const std::string& href, const std::string& page_url) {
  if (href.starts_with("http://") || href.starts_with("https://")) return href;
  if (href.starts_with("//")) return "https:" + href;
  if (href.starts_with("/") && !page_url.empty()) {
    try {
      return split_url(page_url).origin + href;
    } catch (const Error&) {
    }
  }
  return href;
}

std::optional<std::size_t> find_infobox(std::string_view html, Tag* found) {
  std::size_t pos = 0;
  while (auto t = next_tag(html, pos)) {
    pos = t->end;
    if (t->closing || t->name != "table") continue;
    auto cls = attribute(t->attrs, "class");
    if (cls && util::casefold(*cls).find("infobox") != std::string::npos) {
      *found = *t;
      return t->begin;
    }
  }
  return std::nullopt;
}

std::optional<std::string> heading(std::string_view html) {
  std::size_t pos = 0;
  while (auto t = next_tag(html, pos)) {
    pos = t->end;
    if (t->closing || t->name != "h1") continue;
    std::size_t inner_end = 0;
    element_end(html, *t, &inner_end);
    return present(text_content(html.substr(t->end, inner_end - t->end)));
  }
  return std::nullopt;
}

}  // namespace

std::string decode_html_entities(std::string_view text) {
  static const std::map<std::string, char32_t, std::less<>> named{
      {"amp", '&'},    {"lt", '<'},     {"gt", '>'},     {"quot", '"'},   {"apos", '\''},
      {"nbsp", 0xA0},  {"auml", 0xE4},  {"ouml", 0xF6},  {"uuml", 0xFC},  {"Auml", 0xC4},
      {"Ouml", 0xD6},  {"Uuml", 0xDC},  {"szlig", 0xDF}, {"eacute", 0xE9}, {"egrave", 0xE8},
      {"ndash", 0x2013}, {"mdash", 0x2014}, {"rsquo", 0x2019}};
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '&') {
      out.push_back(text[i]);
      continue;
    }
    auto semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 10) {
      out.push_back('&');
      continue;
    }
    auto name = text.substr(i + 1, semi - i - 1);
    std::optional<char32_t> cp;
    if (!name.empty() && name[0] == '#') {
      unsigned long v = 0;
      bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
      auto digits = name.substr(hex ? 2 : 1);
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, hex ? 16 : 10);
      if (ec == std::errc{} && p == digits.data() + digits.size() && v > 0 && v < 0x110000)
        cp = static_cast<char32_t>(v);
    } else if (auto it = named.find(name); it != named.end()) {
      cp = it->second;
    }
    if (!cp) {
      out.push_back('&');
      continue;
    }
    util::append_utf8(out, *cp);
    i = semi;
  }
  return out;
}

RawRecord parse_wiki_street_page(std::string_view html, const std::string& page_url,
                                 const Clock& clock) {
  Tag table_tag;
  if (!find_infobox(html, &table_tag)) throw NotAStreetPage("no infobox table in page " + page_url);
  std::size_t inner_end = 0;
  element_end(html, table_tag, &inner_end);
  auto table = html.substr(table_tag.end, inner_end - table_tag.end);

  RawRecord r;
  r.source = Source::wikihistory;
  r.source_url = page_url;
  std::optional<std::string> honoree_link;

  for (auto& [label, cell] : infobox_rows(table)) {
    auto it = label_table().find(label);
    if (it == label_table().end()) continue;
    auto value = present(cell.text);
    switch (it->second) {
      case Field::street_name:
        if (value && r.street_name.empty()) r.street_name = *value;
        break;
      case Field::district:
        if (!r.district) r.district = value;
        break;
      case Field::denomination:
        if (!r.denomination) r.denomination = value;
        break;
      case Field::honoree_name:
        if (!r.honoree_name) {
          r.honoree_name = value;
          if (cell.href) honoree_link = resolve_link(*cell.href, page_url);
        }
        break;
      case Field::gender:
        if (!r.gender) r.gender = value;
        break;
      case Field::occupation:
        if (!r.occupation_raw) r.occupation_raw = value;
        break;
      case Field::birth:
        if (!r.birth) r.birth = value;
        break;
      case Field::death:
        if (!r.death) r.death = value;
        break;
      case Field::country:
        if (!r.country) r.country = value;
        break;
      case Field::honoree_url:
        if (!r.honoree_url) {
          if (cell.href) r.honoree_url = resolve_link(*cell.href, page_url);
          else r.honoree_url = value;
        }
        break;
      case Field::image:
        if (!r.image_url && cell.img) r.image_url = resolve_link(*cell.img, page_url);
        break;
    }
  }
  if (!r.honoree_url && honoree_link) r.honoree_url = honoree_link;
  if (r.street_name.empty()) {
    if (auto h = heading(html)) r.street_name = *h;
  }
  if (r.street_name.empty()) throw NotAStreetPage("infobox has no street name: " + page_url);
  r.retrieved_at = clock();
  return r;
}

}  // namespace streetmaps::ingest
