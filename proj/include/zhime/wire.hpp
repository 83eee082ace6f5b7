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

// JSON encodings shared by the HTTP service and the CLI. Field names match
// docs/api.md.

#ifndef ZHIME_WIRE_HPP_
#define ZHIME_WIRE_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "zhime/pinyin.hpp"
#include "zhime/session.hpp"
#include "zhime/stroke_codec.hpp"

namespace zhime::wire {

using nlohmann::json;

inline const char* to_string(Mode m) {
  return m == Mode::Phonetic ? "phonetic" : "stroke";
}

inline const char* to_string(Layout l) {
  return l == Layout::PinyinQwerty ? "pinyin" : "bpmf";
}

inline std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "phonetic") return Mode::Phonetic;
  if (s == "stroke") return Mode::Stroke;
  return std::nullopt;
}

inline std::optional<Layout> parse_layout(std::string_view s) {
  if (s == "pinyin") return Layout::PinyinQwerty;
  if (s == "bpmf") return Layout::Bpmf;
  return std::nullopt;
}

// {"kind":"letter","value":"a"}, {"kind":"tone","value":1},
// {"kind":"delimiter"}, {"kind":"backspace"}, {"kind":"select","index":0},
// {"kind":"next"}, {"kind":"prev"}. nullopt for anything else.
inline std::optional<KeyInput> parse_key(const json& j) {
  if (!j.is_object()) return std::nullopt;
  auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string()) return std::nullopt;
  const auto kind = kind_it->get<std::string>();

  if (kind == "letter") {
    auto v = j.find("value");
    if (v == j.end() || !v->is_string()) return std::nullopt;
    const auto s = v->get<std::string>();
    if (s.size() != 1 || s[0] <= ' ' || s[0] > '~') return std::nullopt;
    return key::letter(s[0]);
  }
  if (kind == "tone") {
    auto v = j.find("value");
    if (v == j.end() || !v->is_number_integer()) return std::nullopt;
    const auto t = v->get<long long>();
    if (t < 1 || t > 5) return std::nullopt;
    return key::tone(static_cast<int>(t));
  }
  if (kind == "select") {
    auto v = j.find("index");
    if (v == j.end() || !v->is_number_integer()) return std::nullopt;
    const auto i = v->get<long long>();
    if (i < 0) return std::nullopt;
    return key::select(static_cast<std::size_t>(i));
  }
  if (kind == "delimiter") return key::delimiter();
  if (kind == "backspace") return key::backspace();
  if (kind == "next") return key::next();
  if (kind == "prev") return key::prev();
  return std::nullopt;
}

inline json to_json(const KeyInput& k) {
  switch (k.kind) {
    case KeyInput::Kind::Letter:
      return {{"kind", "letter"}, {"value", std::string(1, k.letter)}};
    case KeyInput::Kind::ToneDiacritic:
      return {{"kind", "tone"}, {"value", k.tone}};
    case KeyInput::Kind::Delimiter:
      return {{"kind", "delimiter"}};
    case KeyInput::Kind::Backspace:
      return {{"kind", "backspace"}};
    case KeyInput::Kind::CandidateSelect:
      return {{"kind", "select"}, {"index", k.index}};
    case KeyInput::Kind::CandidateNext:
      return {{"kind", "next"}};
    case KeyInput::Kind::CandidatePrev:
      return {{"kind", "prev"}};
  }
  return {};
}

inline json to_json(const TonedSyllable& s) {
  // Syllables without a vowel (abbreviations, "ng") fall back to digits.
  auto display = try_render_toned(s);
  return {{"base", s.base},
          {"tone", s.tone},
          {"display", display ? *display : s.to_string()}};
}

inline json portion_json(const std::vector<TonedSyllable>& portion) {
  json arr = json::array();
  for (const auto& s : portion) arr.push_back(to_json(s));
  return arr;
}

inline json to_json(const EngineEvent& e) {
  return {{"accepted", e.accepted},
          {"buffer", e.buffer_echo},
          {"validation", to_string(e.validation)},
          {"phonetic_portion", portion_json(e.phonetic_portion)},
          {"candidates", e.candidates},
          {"selected", e.selected},
          {"committed_delta", e.committed_delta}};
}

inline json snapshot_json(const std::string& id, const InputSession& s) {
  const auto e = s.snapshot();
  return {{"id", id},
          {"mode", to_string(s.mode())},
          {"layout", to_string(s.layout())},
          {"buffer", e.buffer_echo},
          {"validation", to_string(e.validation)},
          {"phonetic_portion", portion_json(e.phonetic_portion)},
          {"candidates", e.candidates},
          {"selected", e.selected},
          {"output", s.output()}};
}

inline json to_json(const CollisionReport& r) {
  json worst = json::array();
  for (const auto& c : r.worst) {
    worst.push_back({{"code", c.code}, {"hanzi", c.hanzi}});
  }
  return {{"total_codes", r.total_codes},
          {"colliding_codes", r.colliding_codes},
          {"worst", worst}};
}

}  // namespace zhime::wire

#endif  // ZHIME_WIRE_HPP_
