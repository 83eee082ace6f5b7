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

// Radical-based character codes. Strokes fall into six classes, the 26 key
// radicals sit on the letter keys, and a character is typed as the letters
// of its radicals, at most four of them.

#ifndef ZHIME_STROKE_CODEC_HPP_
#define ZHIME_STROKE_CODEC_HPP_

#include <algorithm>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zhime/lexicon.hpp"
#include "zhime/radical.hpp"
#include "zhime/text_file.hpp"
#include "zhime/utf8.hpp"

namespace zhime {

// Glyph varieties of each stroke class.
class StrokeVarietyTable {
 public:
  StrokeVarietyTable() = default;
  explicit StrokeVarietyTable(std::map<char32_t, StrokeClass> classes)
      : classes_(std::move(classes)) {}

  const std::map<char32_t, StrokeClass>& classes() const { return classes_; }

  const StrokeClass* find(char32_t glyph) const {
    auto it = classes_.find(glyph);
    return it == classes_.end() ? nullptr : &it->second;
  }

 private:
  std::map<char32_t, StrokeClass> classes_;
};

// Format: glyph<TAB>stroke_class. A glyph may appear only once.
inline StrokeVarietyTable parse_stroke_varieties(std::string_view content,
                                                 const std::string& source) {
  std::map<char32_t, StrokeClass> classes;
  for_each_data_line(content, source, [&](std::size_t n, std::string_view line) {
    auto f = split(line, '\t');
    if (f.size() != 2) throw LoadError(source, n, "expected glyph<TAB>stroke_class");
    auto glyph = decode_utf8(f[0]);
    if (!glyph || glyph->size() != 1) {
      throw LoadError(source, n, "glyph must be exactly one character");
    }
    if (f[1].size() != 1 || f[1][0] < '1' || f[1][0] > '6') {
      throw LoadError(source, n, "stroke class must be 1-6");
    }
    if (!classes.emplace((*glyph)[0], static_cast<StrokeClass>(f[1][0] - '0'))
             .second) {
      throw LoadError(source, n, "glyph " + std::string(f[0]) + " listed twice");
    }
  });
  return StrokeVarietyTable(std::move(classes));
}

inline StrokeVarietyTable load_stroke_varieties(
    const std::filesystem::path& path) {
  return parse_stroke_varieties(read_text_file(path), path.string());
}

inline StrokeClass classify_stroke(const StrokeVarietyTable& table,
                                   char32_t glyph) {
  if (const auto* c = table.find(glyph)) return *c;
  throw std::invalid_argument("unknown stroke glyph " + encode_utf8(glyph));
}

inline StrokeClass classify_stroke(const StrokeVarietyTable& table,
                                   std::string_view glyph) {
  auto cps = decode_utf8(glyph);
  if (!cps || cps->size() != 1) {
    throw std::invalid_argument("unknown stroke glyph " + std::string(glyph));
  }
  return classify_stroke(table, (*cps)[0]);
}

inline char radical_key(const RadicalKeyMap& map, std::string_view radical) {
  if (const auto* r = map.find(radical)) return r->letter;
  throw std::invalid_argument("unknown radical '" + std::string(radical) + "'");
}

struct CharacterDecomposition {
  char32_t hanzi = 0;
  std::vector<std::string> radicals;
  bool operator==(const CharacterDecomposition&) const = default;
};

// Up to four radicals are typed in order. Longer decompositions keep the
// first three radicals and the last one.
inline StrokeCode encode_character(const RadicalKeyMap& map,
                                   const CharacterDecomposition& decomp) {
  const auto& rs = decomp.radicals;
  if (rs.empty()) {
    throw std::invalid_argument("decomposition of " + encode_utf8(decomp.hanzi) +
                                " has no radicals");
  }
  std::string code;
  if (rs.size() <= kMaxCodeLength) {
    for (const auto& r : rs) code.push_back(radical_key(map, r));
  } else {
    for (std::size_t i = 0; i < kMaxCodeLength - 1; ++i) {
      code.push_back(radical_key(map, rs[i]));
    }
    code.push_back(radical_key(map, rs.back()));
  }
  return StrokeCode(std::move(code));
}

inline std::vector<std::string> decode_code(const Lexicon& lex,
                                            const StrokeCode& code) {
  return lex.lookup_by_code(code);
}

class DecompositionTable {
 public:
  DecompositionTable() = default;
  explicit DecompositionTable(std::vector<CharacterDecomposition> rows)
      : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) index_.emplace(rows_[i].hanzi, i);
  }

  const std::vector<CharacterDecomposition>& rows() const { return rows_; }

  const CharacterDecomposition* find(char32_t hanzi) const {
    auto it = index_.find(hanzi);
    return it == index_.end() ? nullptr : &rows_[it->second];
  }

 private:
  std::vector<CharacterDecomposition> rows_;
  std::unordered_map<char32_t, std::size_t> index_;
};

// Format: hanzi<TAB>radical_id,radical_id,...
inline DecompositionTable parse_decompositions(std::string_view content,
                                               const std::string& source,
                                               const RadicalKeyMap& map) {
  std::vector<CharacterDecomposition> rows;
  std::unordered_map<char32_t, std::size_t> seen;
  for_each_data_line(content, source, [&](std::size_t n, std::string_view line) {
    auto f = split(line, '\t');
    if (f.size() != 2) throw LoadError(source, n, "expected hanzi<TAB>radicals");
    auto cps = decode_utf8(f[0]);
    if (!cps || cps->size() != 1 || !is_cjk_ideograph((*cps)[0])) {
      throw LoadError(source, n, "hanzi must be exactly one CJK ideograph");
    }
    CharacterDecomposition d{(*cps)[0], {}};
    if (!seen.emplace(d.hanzi, n).second) {
      throw LoadError(source, n, "duplicate decomposition for " + std::string(f[0]));
    }
    for (auto r : split(f[1], ',')) {
      if (!map.contains(r)) {
        throw LoadError(source, n, "radical '" + std::string(r) + "' not in radical map");
      }
      d.radicals.emplace_back(r);
    }
    rows.push_back(std::move(d));
  });
  return DecompositionTable(std::move(rows));
}

inline DecompositionTable load_decompositions(const std::filesystem::path& path,
                                              const RadicalKeyMap& map) {
  return parse_decompositions(read_text_file(path), path.string(), map);
}

struct CodeCollision {
  std::string code;
  std::vector<std::string> hanzi;
  bool operator==(const CodeCollision&) const = default;
};

struct CollisionReport {
  std::size_t total_codes = 0;
  std::size_t colliding_codes = 0;
  // Every code shared by two or more hanzi, largest set first, then by code.
  std::vector<CodeCollision> worst;
  bool operator==(const CollisionReport&) const = default;
};

inline CollisionReport collision_report(const Lexicon& lex) {
  CollisionReport report;
  for (const auto& [code, cands] : lex.code_groups()) {
    ++report.total_codes;
    if (cands.size() >= 2) {
      ++report.colliding_codes;
      report.worst.push_back({code, candidate_texts(cands)});
    }
  }
  std::stable_sort(report.worst.begin(), report.worst.end(),
                   [](const auto& a, const auto& b) {
                     return a.hanzi.size() > b.hanzi.size();
                   });
  return report;
}

}  // namespace zhime

#endif  // ZHIME_STROKE_CODEC_HPP_
