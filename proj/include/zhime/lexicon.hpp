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

// The dictionary of single hanzi and its lookup indexes. A Lexicon is
// immutable once built and may be read from any number of threads.

#ifndef ZHIME_LEXICON_HPP_
#define ZHIME_LEXICON_HPP_

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zhime/radical.hpp"
#include "zhime/syllable.hpp"
#include "zhime/text_file.hpp"
#include "zhime/utf8.hpp"

namespace zhime {

inline constexpr std::size_t kMaxCodeLength = 4;

// One to four letters over a-z.
class StrokeCode {
 public:
  static bool is_valid(std::string_view s) {
    return !s.empty() && s.size() <= kMaxCodeLength && is_lower_ascii(s);
  }

  static std::optional<StrokeCode> parse(std::string_view s) {
    if (!is_valid(s)) return std::nullopt;
    return StrokeCode(std::string(s));
  }

  explicit StrokeCode(std::string letters) : letters_(std::move(letters)) {
    if (!is_valid(letters_)) {
      throw std::invalid_argument("stroke code must be 1-4 lowercase letters: '" +
                                  letters_ + "'");
    }
  }

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  auto operator<=>(const StrokeCode&) const = default;

 private:
  std::string letters_;
};

struct LexiconEntry {
  char32_t hanzi = 0;
  std::vector<TonedSyllable> readings;
  std::uint64_t frequency = 0;
  std::optional<StrokeCode> stroke_code;

  std::string text() const { return encode_utf8(hanzi); }
  bool operator==(const LexiconEntry&) const = default;
};

struct Candidate {
  char32_t hanzi = 0;
  std::uint64_t frequency = 0;
  bool operator==(const Candidate&) const = default;
};

// Descending frequency, then ascending scalar value.
inline bool ranks_before(const Candidate& a, const Candidate& b) {
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.hanzi < b.hanzi;
}

// Sorts and collapses repeated hanzi, keeping the highest weight for each.
inline void rank_candidates(std::vector<Candidate>& cands) {
  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    if (a.hanzi != b.hanzi) return a.hanzi < b.hanzi;
    return a.frequency > b.frequency;
  });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const auto& a, const auto& b) {
                            return a.hanzi == b.hanzi;
                          }),
              cands.end());
  std::sort(cands.begin(), cands.end(), ranks_before);
}

inline std::vector<std::string> candidate_texts(
    const std::vector<Candidate>& cands) {
  std::vector<std::string> out;
  out.reserve(cands.size());
  for (const auto& c : cands) out.push_back(encode_utf8(c.hanzi));
  return out;
}

inline std::string reading_key(std::span<const TonedSyllable> reading) {
  std::string key;
  for (const auto& s : reading) {
    if (!key.empty()) key.push_back('\'');
    key += s.to_string();
  }
  return key;
}

class Lexicon {
 public:
  Lexicon() = default;

  // Builds every index from the entries; the result depends only on the
  // inputs, so rebuilding from the same entries is bit-identical.
  Lexicon(std::vector<LexiconEntry> entries, SyllableTable syllables,
          RadicalKeyMap radicals)
      : entries_(std::move(entries)),
        syllables_(std::move(syllables)),
        radicals_(std::move(radicals)) {
    for (const auto& e : entries_) {
      for (const auto& r : e.readings) {
        by_reading_[r.to_string()].push_back({e.hanzi, e.frequency});
      }
      if (e.stroke_code) {
        by_code_[e.stroke_code->letters()].push_back({e.hanzi, e.frequency});
      }
    }
    for (auto& [key, cands] : by_reading_) rank_candidates(cands);
    for (auto& [key, cands] : by_code_) rank_candidates(cands);
  }

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  const SyllableTable& syllables() const { return syllables_; }
  const RadicalKeyMap& radicals() const { return radicals_; }

  const std::vector<Candidate>& ranked_by_reading(
      std::span<const TonedSyllable> reading) const {
    auto it = by_reading_.find(reading_key(reading));
    return it == by_reading_.end() ? empty() : it->second;
  }

  const std::vector<Candidate>& ranked_by_reading(
      const TonedSyllable& reading) const {
    return ranked_by_reading(std::span<const TonedSyllable>(&reading, 1));
  }

  std::vector<std::string> lookup_by_reading(
      std::span<const TonedSyllable> reading) const {
    return candidate_texts(ranked_by_reading(reading));
  }

  const std::vector<Candidate>& ranked_by_code(std::string_view code) const {
    auto it = by_code_.find(code);
    return it == by_code_.end() ? empty() : it->second;
  }

  std::vector<std::string> lookup_by_code(const StrokeCode& code) const {
    return candidate_texts(ranked_by_code(code.letters()));
  }

  // Same three-way verdict as syllable_status, over the stroke codes.
  ValidationResult code_status(std::string_view prefix) const {
    if (prefix.empty()) return ValidationResult::ValidPrefix;
    auto it = by_code_.lower_bound(prefix);
    if (it == by_code_.end() || !it->first.starts_with(prefix)) {
      return ValidationResult::Invalid;
    }
    return it->first == prefix ? ValidationResult::Valid
                               : ValidationResult::ValidPrefix;
  }

  const std::map<std::string, std::vector<Candidate>, std::less<>>&
  code_groups() const {
    return by_code_;
  }

 private:
  static const std::vector<Candidate>& empty() {
    static const std::vector<Candidate> kEmpty;
    return kEmpty;
  }

  std::vector<LexiconEntry> entries_;
  SyllableTable syllables_;
  RadicalKeyMap radicals_;
  std::unordered_map<std::string, std::vector<Candidate>> by_reading_;
  std::map<std::string, std::vector<Candidate>, std::less<>> by_code_;
};

inline std::vector<std::string> lookup_by_reading(
    const Lexicon& lex, std::span<const TonedSyllable> reading) {
  return lex.lookup_by_reading(reading);
}

inline std::vector<std::string> lookup_by_code(const Lexicon& lex,
                                               const StrokeCode& code) {
  return lex.lookup_by_code(code);
}

// Format: hanzi<TAB>reading[,reading...]<TAB>frequency[<TAB>stroke_code].
// Readings are base plus tone digit and must appear in the syllable table.
inline std::vector<LexiconEntry> parse_dictionary(std::string_view content,
                                                  const std::string& source,
                                                  const SyllableTable& table) {
  std::vector<LexiconEntry> entries;
  std::set<std::pair<char32_t, TonedSyllable>> seen;

  for_each_data_line(content, source, [&](std::size_t n, std::string_view line) {
    auto f = split(line, '\t');
    if (f.size() != 3 && f.size() != 4) {
      throw LoadError(source, n,
                      "expected hanzi<TAB>readings<TAB>frequency<TAB>stroke_code");
    }
    LexiconEntry e;

    auto scalars = decode_utf8(f[0]);
    if (!scalars || scalars->size() != 1) {
      throw LoadError(source, n, "hanzi must be exactly one character");
    }
    if (!is_cjk_ideograph((*scalars)[0])) {
      throw LoadError(source, n, "hanzi must be a CJK ideograph");
    }
    e.hanzi = (*scalars)[0];

    if (f[1].empty()) throw LoadError(source, n, "at least one reading required");
    for (auto r : split(f[1], ',')) {
      auto syl = TonedSyllable::parse(r);
      if (!syl) {
        throw LoadError(source, n,
                        "reading '" + std::string(r) +
                            "' must be 1-6 lowercase letters plus tone 1-5");
      }
      if (!table.has_toned(*syl)) {
        throw LoadError(source, n,
                        "reading '" + std::string(r) +
                            "' is not in the syllable table");
      }
      if (std::find(e.readings.begin(), e.readings.end(), *syl) !=
          e.readings.end()) {
        throw LoadError(source, n, "duplicate reading '" + std::string(r) + "'");
      }
      if (!seen.emplace(e.hanzi, *syl).second) {
        throw LoadError(source, n,
                        "duplicate entry " + std::string(f[0]) + " " +
                            std::string(r));
      }
      e.readings.push_back(std::move(*syl));
    }

    const auto fr = f[2];
    auto [ptr, ec] = std::from_chars(fr.data(), fr.data() + fr.size(), e.frequency);
    if (fr.empty() || ec != std::errc() || ptr != fr.data() + fr.size()) {
      throw LoadError(source, n, "frequency must be a non-negative integer");
    }

    if (f.size() == 4 && !f[3].empty()) {
      if (f[3].size() > kMaxCodeLength) {
        throw LoadError(source, n, "stroke code longer than four letters");
      }
      if (!is_lower_ascii(f[3])) {
        throw LoadError(source, n, "stroke code must use letters a-z");
      }
      e.stroke_code = StrokeCode(std::string(f[3]));
    }
    entries.push_back(std::move(e));
  });
  return entries;
}

inline Lexicon load_lexicon(const std::filesystem::path& dictionary_path,
                            const std::filesystem::path& syllable_path,
                            const std::filesystem::path& radical_map_path) {
  auto table = load_syllable_table(syllable_path);
  auto radicals = load_radical_map(radical_map_path);
  auto entries = parse_dictionary(read_text_file(dictionary_path),
                                  dictionary_path.string(), table);
  return Lexicon(std::move(entries), std::move(table), std::move(radicals));
}

}  // namespace zhime

#endif  // ZHIME_LEXICON_HPP_
