/*
  Copyright 2026 The zhime Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef ZHIME_SYLLABLE_HPP_
#define ZHIME_SYLLABLE_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zhime/text_file.hpp"

namespace zhime {

inline constexpr std::size_t kMaxSyllableLength = 6;
inline constexpr int kNeutralTone = 5;

inline bool is_valid_base(std::string_view s) {
  return !s.empty() && s.size() <= kMaxSyllableLength && is_lower_ascii(s);
}

// A base syllable plus tone, 1-4 for the marked tones and 5 for neutral.
struct TonedSyllable {
  std::string base;
  int tone = kNeutralTone;

  auto operator<=>(const TonedSyllable&) const = default;

  // Digit notation, e.g. "ma1".
  std::string to_string() const {
    return base + static_cast<char>('0' + tone);
  }

  static std::optional<TonedSyllable> parse(std::string_view s) {
    if (s.size() < 2) return std::nullopt;
    const char digit = s.back();
    if (digit < '1' || digit > '5') return std::nullopt;
    s.remove_suffix(1);
    if (!is_valid_base(s)) return std::nullopt;
    return TonedSyllable{std::string(s), digit - '0'};
  }
};

enum class ValidationResult { Valid, ValidPrefix, Invalid };

inline const char* to_string(ValidationResult v) {
  switch (v) {
    case ValidationResult::Valid:
      return "valid";
    case ValidationResult::ValidPrefix:
      return "valid_prefix";
    case ValidationResult::Invalid:
      return "invalid";
  }
  return "invalid";
}

// The acceptable syllables and abbreviations. Each base carries the set of
// tones it is attested with, stored as a bitmask over 1..5.
class SyllableTable {
 public:
  using ToneMask = std::uint8_t;
  static constexpr ToneMask kAllTones = 0b111110;

  SyllableTable() { nodes_.emplace_back(); }

  // Precondition: inputs satisfy the table invariants (see
  // parse_syllable_table, which checks them).
  SyllableTable(std::map<std::string, ToneMask> tones,
                std::map<std::string, std::vector<std::string>> abbreviations)
      : tones_(std::move(tones)), abbreviations_(std::move(abbreviations)) {
    nodes_.emplace_back();
    for (const auto& [base, mask] : tones_) insert(base);
  }

  ValidationResult status(std::string_view buffer) const {
    if (buffer.empty()) return ValidationResult::ValidPrefix;
    const int node = find(buffer);
    if (node < 0) return ValidationResult::Invalid;
    if (nodes_[node].terminal || abbreviations_.contains(std::string(buffer))) {
      return ValidationResult::Valid;
    }
    return ValidationResult::ValidPrefix;
  }

  bool is_base(std::string_view s) const {
    const int node = find(s);
    return node >= 0 && nodes_[node].terminal;
  }

  bool is_abbreviation(std::string_view s) const {
    return abbreviations_.contains(std::string(s));
  }

  const std::vector<std::string>& expansions(std::string_view abbrev) const {
    static const std::vector<std::string> kEmpty;
    auto it = abbreviations_.find(std::string(abbrev));
    return it == abbreviations_.end() ? kEmpty : it->second;
  }

  ToneMask tones_of(std::string_view base) const {
    auto it = tones_.find(std::string(base));
    return it == tones_.end() ? 0 : it->second;
  }

  bool has_toned(const TonedSyllable& s) const {
    if (s.tone < 1 || s.tone > 5) return false;
    return (tones_of(s.base) & (1u << s.tone)) != 0;
  }

  std::vector<std::string> base_syllables() const {
    std::vector<std::string> out;
    out.reserve(tones_.size());
    for (const auto& [base, mask] : tones_) out.push_back(base);
    return out;
  }

  std::vector<TonedSyllable> toned_syllables() const {
    std::vector<TonedSyllable> out;
    for (const auto& [base, mask] : tones_) {
      for (int t = 1; t <= 5; ++t) {
        if (mask & (1u << t)) out.push_back({base, t});
      }
    }
    return out;
  }

  std::size_t base_count() const { return tones_.size(); }

  const std::map<std::string, std::vector<std::string>>& abbreviations()
      const {
    return abbreviations_;
  }

 private:
  struct Node {
    std::array<int, 26> next;
    bool terminal = false;
    Node() { next.fill(-1); }
  };

  void insert(std::string_view s) {
    int node = 0;
    for (char c : s) {
      int& slot = nodes_[node].next[c - 'a'];
      if (slot < 0) {
        slot = static_cast<int>(nodes_.size());
        nodes_.emplace_back();
      }
      node = nodes_[node].next[c - 'a'];
    }
    nodes_[node].terminal = true;
  }

  int find(std::string_view s) const {
    int node = 0;
    for (char c : s) {
      if (c < 'a' || c > 'z') return -1;
      node = nodes_[node].next[c - 'a'];
      if (node < 0) return -1;
    }
    return node;
  }

  std::map<std::string, ToneMask> tones_;
  std::map<std::string, std::vector<std::string>> abbreviations_;
  std::vector<Node> nodes_;
};

inline ValidationResult syllable_status(const SyllableTable& table,
                                        std::string_view buffer) {
  return table.status(buffer);
}

inline std::set<std::string> match_abbreviation(const SyllableTable& table,
                                                std::string_view buffer) {
  const auto& exp = table.expansions(buffer);
  return {exp.begin(), exp.end()};
}

// Lines are either `base`, `base<TAB>tones` (tones a subset of 1-5, e.g.
// `1234`), or `abbrev=expansion,expansion`. A bare base takes all five
// tones.
inline SyllableTable parse_syllable_table(std::string_view content,
                                          const std::string& source) {
  std::map<std::string, SyllableTable::ToneMask> tones;
  std::map<std::string, std::vector<std::string>> abbreviations;
  std::map<std::string, std::size_t> abbrev_lines;

  for_each_data_line(content, source, [&](std::size_t n, std::string_view line) {
    if (auto eq = line.find('='); eq != std::string_view::npos) {
      std::string abbrev(line.substr(0, eq));
      if (!is_valid_base(abbrev)) {
        throw LoadError(source, n, "abbreviation must be 1-6 lowercase letters");
      }
      if (abbreviations.contains(abbrev)) {
        throw LoadError(source, n, "duplicate abbreviation '" + abbrev + "'");
      }
      std::vector<std::string> expansions;
      for (auto part : split(line.substr(eq + 1), ',')) {
        if (!is_valid_base(part)) {
          throw LoadError(source, n,
                          "abbreviation expansion must be 1-6 lowercase letters");
        }
        std::string exp(part);
        if (std::find(expansions.begin(), expansions.end(), exp) !=
            expansions.end()) {
          throw LoadError(source, n, "duplicate expansion '" + exp + "'");
        }
        expansions.push_back(std::move(exp));
      }
      abbrev_lines[abbrev] = n;
      abbreviations.emplace(std::move(abbrev), std::move(expansions));
      return;
    }

    auto fields = split(line, '\t');
    if (fields.size() > 2) {
      throw LoadError(source, n, "expected base or base<TAB>tones");
    }
    std::string base(fields[0]);
    if (!is_valid_base(base)) {
      throw LoadError(source, n, "syllable must be 1-6 lowercase letters");
    }
    SyllableTable::ToneMask mask = SyllableTable::kAllTones;
    if (fields.size() == 2) {
      mask = 0;
      if (fields[1].empty()) throw LoadError(source, n, "empty tone list");
      for (char c : fields[1]) {
        if (c < '1' || c > '5') {
          throw LoadError(source, n, "tone must be a digit 1-5");
        }
        const auto bit = static_cast<SyllableTable::ToneMask>(1u << (c - '0'));
        if (mask & bit) throw LoadError(source, n, "duplicate tone");
        mask |= bit;
      }
    }
    if (!tones.emplace(base, mask).second) {
      throw LoadError(source, n, "duplicate syllable '" + base + "'");
    }
  });

  for (const auto& [abbrev, expansions] : abbreviations) {
    const std::size_t n = abbrev_lines[abbrev];
    if (tones.contains(abbrev)) {
      throw LoadError(source, n,
                      "abbreviation '" + abbrev + "' collides with a syllable");
    }
    bool prefix_of_one = false;
    for (const auto& exp : expansions) {
      if (!tones.contains(exp)) {
        throw LoadError(source, n, "expansion '" + exp + "' is not a syllable");
      }
      if (exp.size() > abbrev.size() && exp.starts_with(abbrev)) {
        prefix_of_one = true;
      }
    }
    if (!prefix_of_one) {
      throw LoadError(source, n,
                      "abbreviation '" + abbrev +
                          "' is not a strict prefix of any expansion");
    }
  }
  return SyllableTable(std::move(tones), std::move(abbreviations));
}

inline SyllableTable load_syllable_table(const std::filesystem::path& path) {
  return parse_syllable_table(read_text_file(path), path.string());
}

}  // namespace zhime

#endif  // ZHIME_SYLLABLE_HPP_
