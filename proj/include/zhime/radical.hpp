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

#ifndef ZHIME_RADICAL_HPP_
#define ZHIME_RADICAL_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zhime/text_file.hpp"

namespace zhime {

// The six basic stroke categories, numbered as in the classic stroke table.
enum class StrokeClass : int {
  Horizontal = 1,
  Vertical = 2,
  LeftSlanting = 3,
  RightSlanting = 4,
  UpRightCurving = 5,
  LowerLeftCurving = 6,
};

inline constexpr std::array<std::string_view, 6> kStrokeClassNames = {
    "horizontal",     "vertical",        "left-slanting",
    "right-slanting", "up-right-curving", "lower-left-curving"};

inline std::string_view stroke_class_name(StrokeClass c) {
  return kStrokeClassNames[static_cast<int>(c) - 1];
}

inline int stroke_class_number(StrokeClass c) { return static_cast<int>(c); }

inline std::optional<StrokeClass> stroke_class_from_number(int n) {
  if (n < 1 || n > 6) return std::nullopt;
  return static_cast<StrokeClass>(n);
}

inline std::optional<StrokeClass> stroke_class_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kStrokeClassNames.size(); ++i) {
    if (kStrokeClassNames[i] == name) return static_cast<StrokeClass>(i + 1);
  }
  return std::nullopt;
}

inline constexpr std::size_t kRadicalCount = 26;

// Bijection between the 26 key radicals and the letters a-z.
class RadicalKeyMap {
 public:
  struct Radical {
    std::string id;
    char letter;
    StrokeClass stroke_class;
    bool operator==(const Radical&) const = default;
  };

  RadicalKeyMap() { by_letter_.fill(-1); }

  // Precondition: exactly 26 radicals with distinct ids and letters.
  explicit RadicalKeyMap(std::vector<Radical> radicals)
      : radicals_(std::move(radicals)) {
    by_letter_.fill(-1);
    for (std::size_t i = 0; i < radicals_.size(); ++i) {
      by_id_.emplace(radicals_[i].id, i);
      by_letter_[radicals_[i].letter - 'a'] = static_cast<int>(i);
    }
  }

  const std::vector<Radical>& radicals() const { return radicals_; }

  bool contains(std::string_view id) const {
    return by_id_.contains(std::string(id));
  }

  const Radical* find(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    return it == by_id_.end() ? nullptr : &radicals_[it->second];
  }

  const Radical* for_letter(char letter) const {
    if (letter < 'a' || letter > 'z') return nullptr;
    const int i = by_letter_[letter - 'a'];
    return i < 0 ? nullptr : &radicals_[i];
  }

  bool operator==(const RadicalKeyMap& other) const {
    return radicals_ == other.radicals_;
  }

 private:
  std::vector<Radical> radicals_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::array<int, 26> by_letter_;
};

inline bool is_valid_radical_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (c == ',' || c == '\t' || c == ' ') return false;
  }
  return true;
}

// Format: radical_id<TAB>letter<TAB>stroke_class, exactly 26 data lines.
inline RadicalKeyMap parse_radical_map(std::string_view content,
                                       const std::string& source) {
  std::vector<RadicalKeyMap::Radical> radicals;
  std::unordered_map<std::string, std::size_t> seen_ids;
  std::array<std::size_t, 26> letter_line{};

  for_each_data_line(content, source, [&](std::size_t n, std::string_view line) {
    auto f = split(line, '\t');
    if (f.size() != 3) {
      throw LoadError(source, n, "expected radical_id<TAB>letter<TAB>stroke_class");
    }
    if (!is_valid_radical_id(f[0])) {
      throw LoadError(source, n, "radical id must be non-empty without commas or spaces");
    }
    if (f[1].size() != 1 || f[1][0] < 'a' || f[1][0] > 'z') {
      throw LoadError(source, n, "key must be a single lowercase letter");
    }
    if (f[2].size() != 1 || f[2][0] < '1' || f[2][0] > '6') {
      throw LoadError(source, n, "stroke class must be 1-6");
    }
    std::string id(f[0]);
    if (!seen_ids.emplace(id, n).second) {
      throw LoadError(source, n, "duplicate radical '" + id + "'");
    }
    const char letter = f[1][0];
    if (letter_line[letter - 'a'] != 0) {
      throw LoadError(source, n,
                      std::string("radical map not bijective: letter '") +
                          letter + "' already assigned on line " +
                          std::to_string(letter_line[letter - 'a']));
    }
    letter_line[letter - 'a'] = n;
    radicals.push_back(
        {std::move(id), letter, static_cast<StrokeClass>(f[2][0] - '0')});
  });

  if (radicals.size() != kRadicalCount) {
    throw LoadError(source, 0,
                    "radical map not bijective: expected 26 radicals, found " +
                        std::to_string(radicals.size()));
  }
  return RadicalKeyMap(std::move(radicals));
}

inline RadicalKeyMap load_radical_map(const std::filesystem::path& path) {
  return parse_radical_map(read_text_file(path), path.string());
}

}  // namespace zhime

#endif  // ZHIME_RADICAL_HPP_
