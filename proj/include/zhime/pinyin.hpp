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

#ifndef ZHIME_PINYIN_HPP_
#define ZHIME_PINYIN_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zhime/lexicon.hpp"
#include "zhime/syllable.hpp"

namespace zhime {

namespace detail {

// Precomposed vowels, indexed [vowel][tone - 1]; row 5 is u-umlaut, typed v.
inline constexpr char32_t kMarkedVowels[6][4] = {
    {U'ā', U'á', U'ǎ', U'à'}, {U'ē', U'é', U'ě', U'è'},
    {U'ī', U'í', U'ǐ', U'ì'}, {U'ō', U'ó', U'ǒ', U'ò'},
    {U'ū', U'ú', U'ǔ', U'ù'}, {U'ǖ', U'ǘ', U'ǚ', U'ǜ'},
};

inline int vowel_row(char c) {
  switch (c) {
    case 'a': return 0;
    case 'e': return 1;
    case 'i': return 2;
    case 'o': return 3;
    case 'u': return 4;
    case 'v': return 5;
    default: return -1;
  }
}

inline std::optional<std::size_t> mark_position(std::string_view base) {
  for (char target : {'a', 'e', 'o'}) {
    if (auto p = base.find(target); p != std::string_view::npos) return p;
  }
  if (auto p = base.find("iu"); p != std::string_view::npos) return p + 1;
  if (auto p = base.find("ui"); p != std::string_view::npos) return p + 1;
  for (std::size_t i = base.size(); i-- > 0;) {
    if (vowel_row(base[i]) >= 0) return i;
  }
  return std::nullopt;
}

}  // namespace detail

// Pinyin with its tone mark, e.g. ("ma", 1) -> "mā". v is shown as ü and
// the neutral tone is left unmarked. Returns nullopt when a marked tone
// has no vowel to sit on.
inline std::optional<std::string> try_render_toned(const TonedSyllable& syll) {
  std::string out;
  std::optional<std::size_t> mark;
  if (syll.tone >= 1 && syll.tone <= 4) {
    mark = detail::mark_position(syll.base);
    if (!mark) return std::nullopt;
  }
  for (std::size_t i = 0; i < syll.base.size(); ++i) {
    const char c = syll.base[i];
    if (mark && *mark == i) {
      append_utf8(out, detail::kMarkedVowels[detail::vowel_row(c)][syll.tone - 1]);
    } else if (c == 'v') {
      append_utf8(out, U'ü');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

inline std::string render_toned(const TonedSyllable& syll) {
  if (auto s = try_render_toned(syll)) return *s;
  throw std::invalid_argument("no vowel to mark in '" + syll.to_string() + "'");
}

// Splits a letter string into base syllables using the fewest segments.
// Among equally short splits the longest first segment wins, then the
// longest second, and so on. nullopt when no split exists.
inline std::optional<std::vector<std::string>> segment_phonetic(
    const SyllableTable& table, std::string_view text) {
  if (text.empty() || !is_lower_ascii(text)) return std::nullopt;
  const std::size_t n = text.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  // count[i] and step[i] describe the best split of text[i..n).
  std::vector<std::size_t> count(n + 1, kNone);
  std::vector<std::size_t> step(n + 1, 0);
  count[n] = 0;
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t longest = std::min(kMaxSyllableLength, n - i);
    for (std::size_t len = longest; len >= 1; --len) {
      if (count[i + len] == kNone || !table.is_base(text.substr(i, len))) {
        continue;
      }
      if (count[i] == kNone || count[i + len] + 1 < count[i]) {
        count[i] = count[i + len] + 1;
        step[i] = len;
      }
    }
  }
  if (count[0] == kNone) return std::nullopt;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; i += step[i]) {
    out.emplace_back(text.substr(i, step[i]));
  }
  return out;
}

// Ranked hanzi for one composed syllable. An abbreviation stands for the
// union of its expansions at the same tone.
inline std::vector<Candidate> candidates_for(const Lexicon& lex,
                                             const TonedSyllable& syll) {
  const auto& table = lex.syllables();
  if (!table.is_abbreviation(syll.base)) return lex.ranked_by_reading(syll);
  std::vector<Candidate> merged;
  for (const auto& exp : table.expansions(syll.base)) {
    const auto& c = lex.ranked_by_reading(TonedSyllable{exp, syll.tone});
    merged.insert(merged.end(), c.begin(), c.end());
  }
  rank_candidates(merged);
  return merged;
}

// Placeholder for a syllable that has no hanzi, e.g. "[qiong5]".
inline std::string unconverted(const TonedSyllable& syll) {
  return "[" + syll.to_string() + "]";
}

namespace detail {

inline std::optional<std::string> convert_chunk(const Lexicon& lex,
                                                std::string_view chunk) {
  std::vector<TonedSyllable> sylls;
  std::string letters;
  auto flush = [&](int tone) {
    auto seg = segment_phonetic(lex.syllables(), letters);
    if (!seg) return false;
    for (auto& s : *seg) sylls.push_back({std::move(s), kNeutralTone});
    sylls.back().tone = tone;
    letters.clear();
    return true;
  };
  for (char c : chunk) {
    if (c >= 'a' && c <= 'z') {
      letters.push_back(c);
    } else if (c >= '1' && c <= '5' && !letters.empty()) {
      if (!flush(c - '0')) return std::nullopt;
    } else {
      return std::nullopt;
    }
  }
  if (!letters.empty() && !flush(kNeutralTone)) return std::nullopt;

  std::string out;
  for (const auto& s : sylls) {
    const auto& cands = lex.ranked_by_reading(s);
    out += cands.empty() ? unconverted(s) : encode_utf8(cands.front().hanzi);
  }
  return out;
}

}  // namespace detail

// Batch conversion. Spaces are hard boundaries and are kept; inside a
// chunk a tone digit closes the syllable before it and untoned syllables
// take the neutral tone. Each syllable becomes its top candidate, and a
// chunk that cannot be segmented is echoed in brackets.
inline std::string convert_text(const Lexicon& lex, std::string_view text) {
  std::string out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto chunk = text.substr(pos, end - pos);
    if (!chunk.empty()) {
      if (auto converted = detail::convert_chunk(lex, chunk)) {
        out += *converted;
      } else {
        out += "[" + std::string(chunk) + "]";
      }
    }
    if (end < text.size()) out.push_back(' ');
    pos = end + 1;
  }
  return out;
}

}  // namespace zhime

#endif  // ZHIME_PINYIN_HPP_
