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

// Bopomofo keyboard layouts. A layout only relabels keys: each key position
// produces the pinyin letters of its symbol, and everything downstream sees
// ordinary letters.

#ifndef ZHIME_BPMF_HPP_
#define ZHIME_BPMF_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "zhime/syllable.hpp"
#include "zhime/text_file.hpp"
#include "zhime/utf8.hpp"

namespace zhime {

class BpmfLayout {
 public:
  struct Binding {
    std::string symbol;
    std::string letters;
    bool operator==(const Binding&) const = default;
  };

  BpmfLayout() = default;
  explicit BpmfLayout(std::map<char, Binding> keys) : keys_(std::move(keys)) {}

  const Binding* find(char key) const {
    auto it = keys_.find(key);
    return it == keys_.end() ? nullptr : &it->second;
  }

  const std::map<char, Binding>& keys() const { return keys_; }

 private:
  std::map<char, Binding> keys_;
};

inline std::optional<std::string> bpmf_to_letters(const BpmfLayout& layout,
                                                  char key) {
  if (const auto* b = layout.find(key)) return b->letters;
  return std::nullopt;
}

// Format: key<TAB>symbol<TAB>letters, key being one printable ASCII char.
inline BpmfLayout parse_bpmf_layout(std::string_view content,
                                    const std::string& source) {
  std::map<char, BpmfLayout::Binding> keys;
  for_each_data_line(content, source, [&](std::size_t n, std::string_view line) {
    auto f = split(line, '\t');
    if (f.size() != 3) throw LoadError(source, n, "expected key<TAB>symbol<TAB>letters");
    if (f[0].size() != 1 || f[0][0] <= ' ' || f[0][0] > '~') {
      throw LoadError(source, n, "key must be one printable ASCII character");
    }
    auto sym = decode_utf8(f[1]);
    if (!sym || sym->size() != 1) {
      throw LoadError(source, n, "symbol must be exactly one character");
    }
    if (!is_valid_base(f[2])) {
      throw LoadError(source, n, "letters must be 1-6 lowercase letters");
    }
    if (!keys.emplace(f[0][0], BpmfLayout::Binding{std::string(f[1]),
                                                   std::string(f[2])})
             .second) {
      throw LoadError(source, n, "key '" + std::string(f[0]) + "' bound twice");
    }
  });
  return BpmfLayout(std::move(keys));
}

inline BpmfLayout load_bpmf_layout(const std::filesystem::path& path) {
  return parse_bpmf_layout(read_text_file(path), path.string());
}

}  // namespace zhime

#endif  // ZHIME_BPMF_HPP_
