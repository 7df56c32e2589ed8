// Copyright 2026 The Streetmaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace streetmaps {

enum class CityId { paris, vienna, london, newyork };

enum class Gender { female, male, unknown };

/// Honoree occupation taxonomy: sixteen ISCO-derived groups plus `other`,
/// which absorbs anything the keyword table cannot place.
enum class OccupationGroup {
  legislators,
  writers,
  creative_performing_artists,
  science_engineering_professionals,
  health_associate_professionals,
  sportsmen,
  social_workers,
  teaching_professionals,
  businessmen,
  craft_trades_workers,
  legal_social_professionals,
  religion_representatives,
  military_personnel,
  royals,
  politicians,
  responders_victims_911,
  other,
};

enum class ThemeLayer { occupation, gender, country, period };

enum class Source { wikidata, wikihistory, annotated_csv, curated };

template <class E>
struct EnumNames;

template <>
struct EnumNames<CityId> {
  static constexpr std::array<std::string_view, 4> names{"paris", "vienna", "london", "newyork"};
};
template <>
struct EnumNames<Gender> {
  static constexpr std::array<std::string_view, 3> names{"female", "male", "unknown"};
};
template <>
struct EnumNames<OccupationGroup> {
  static constexpr std::array<std::string_view, 17> names{
      "legislators",
      "writers",
      "creative_performing_artists",
      "science_engineering_professionals",
      "health_associate_professionals",
      "sportsmen",
      "social_workers",
      "teaching_professionals",
      "businessmen",
      "craft_trades_workers",
      "legal_social_professionals",
      "religion_representatives",
      "military_personnel",
      "royals",
      "politicians",
      "responders_victims_911",
      "other",
  };
};
template <>
struct EnumNames<ThemeLayer> {
  static constexpr std::array<std::string_view, 4> names{"occupation", "gender", "country",
                                                         "period"};
};
template <>
struct EnumNames<Source> {
  static constexpr std::array<std::string_view, 4> names{"wikidata", "wikihistory",
                                                         "annotated_csv", "curated"};
};

template <class E>
constexpr std::size_t enum_count() {
  return EnumNames<E>::names.size();
}

template <class E>
constexpr std::string_view to_string(E value) {
  return EnumNames<E>::names[static_cast<std::size_t>(value)];
}

/// Exact (case-sensitive) parse of the canonical spelling.
template <class E>
constexpr std::optional<E> parse_enum(std::string_view text) {
  for (std::size_t i = 0; i < EnumNames<E>::names.size(); ++i)
    if (EnumNames<E>::names[i] == text) return static_cast<E>(i);
  return std::nullopt;
}

template <class E>
constexpr std::array<E, enum_count<E>()> all_values() {
  std::array<E, enum_count<E>()> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<E>(i);
  return out;
}

/// ISO 3166-1 alpha-2 code, or the explicit `unknown` value.
class CountryCode {
 public:
  CountryCode() = default;

  /// Accepts exactly two ASCII uppercase letters; anything else is nullopt.
  static std::optional<CountryCode> from_alpha2(std::string_view code);
  static CountryCode unknown() { return {}; }

  bool is_unknown() const { return code_.empty(); }
  /// "FR", or "unknown".
  std::string_view str() const { return is_unknown() ? std::string_view("unknown") : code_; }

  friend bool operator==(const CountryCode&, const CountryCode&) = default;
  friend auto operator<=>(const CountryCode&, const CountryCode&) = default;

 private:
  explicit CountryCode(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

/// One honorific street. Years are integer years CE; dates are kept at year
/// precision because that is the finest granularity every source carries.
struct StreetRecord {
  std::string record_id;
  std::string street_name;
  CityId city = CityId::paris;
  std::optional<std::string> district;
  std::optional<int> denomination_year;
  std::string honoree_name;
  Gender gender = Gender::unknown;
  std::string occupation_raw;
  OccupationGroup occupation_group = OccupationGroup::other;
  CountryCode country;
  std::optional<int> birth_year;
  std::optional<int> death_year;
  std::optional<std::string> honoree_url;
  std::optional<std::string> image_url;
  Source source = Source::curated;

  friend bool operator==(const StreetRecord&, const StreetRecord&) = default;
};

/// Value of `record` under `theme`, as used for tags and statistics.
/// Period values are decades ("1850s"); records without a denomination
/// year fall in "unknown".
std::string theme_value(const StreetRecord& record, ThemeLayer theme);

/// Whether `value` belongs to the value domain of `theme`.
bool is_theme_value(ThemeLayer theme, std::string_view value);

}  // namespace streetmaps
