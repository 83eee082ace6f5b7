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

// Keystroke state machine for one composition session.
//
// Phonetic mode: letters build a syllable in the buffer, which must always
// be a syllable or a prefix of one. A tone key moves the buffer into the
// phonetic portion with that tone. The delimiter (space) converts the
// phonetic portion syllable by syllable: a single candidate is committed
// at once, several open the candidate window, and a syllable without any
// candidate is committed as "[base<tone>]". A buffer still holding a whole
// syllable at the delimiter gets the neutral tone.
//
// Stroke mode: letters build a code of at most four letters that must be a
// prefix of some dictionary code; the delimiter decodes it.
//
// While the candidate window is open, letters and tone keys are refused;
// the delimiter commits the highlighted candidate and backspace closes the
// window. A refused key leaves the session unchanged.

#ifndef ZHIME_SESSION_HPP_
#define ZHIME_SESSION_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zhime/bpmf.hpp"
#include "zhime/lexicon.hpp"
#include "zhime/pinyin.hpp"
#include "zhime/syllable.hpp"

namespace zhime {

enum class Mode { Phonetic, Stroke };
enum class Layout { PinyinQwerty, Bpmf };

struct KeyInput {
  enum class Kind {
    Letter,
    ToneDiacritic,
    Delimiter,
    Backspace,
    CandidateSelect,
    CandidateNext,
    CandidatePrev,
  };

  Kind kind = Kind::Delimiter;
  char letter = 0;         // Letter: a-z, or a layout key position
  int tone = 0;            // ToneDiacritic: 1-5
  std::size_t index = 0;   // CandidateSelect

  bool operator==(const KeyInput&) const = default;
};

namespace key {
inline KeyInput letter(char c) { return {KeyInput::Kind::Letter, c, 0, 0}; }
inline KeyInput tone(int t) { return {KeyInput::Kind::ToneDiacritic, 0, t, 0}; }
inline KeyInput delimiter() { return {KeyInput::Kind::Delimiter, 0, 0, 0}; }
inline KeyInput backspace() { return {KeyInput::Kind::Backspace, 0, 0, 0}; }
inline KeyInput select(std::size_t i) {
  return {KeyInput::Kind::CandidateSelect, 0, 0, i};
}
inline KeyInput next() { return {KeyInput::Kind::CandidateNext, 0, 0, 0}; }
inline KeyInput prev() { return {KeyInput::Kind::CandidatePrev, 0, 0, 0}; }
}  // namespace key

struct EngineEvent {
  bool accepted = false;
  std::string buffer_echo;
  ValidationResult validation = ValidationResult::ValidPrefix;
  std::vector<TonedSyllable> phonetic_portion;
  std::vector<std::string> candidates;
  std::size_t selected = 0;
  std::string committed_delta;

  bool operator==(const EngineEvent&) const = default;
};

class InputSession {
 public:
  // bpmf must outlive the session and is required for the Bpmf layout.
  InputSession(const Lexicon& lex, Mode mode, Layout layout,
               const BpmfLayout* bpmf = nullptr)
      : lex_(&lex), bpmf_(bpmf), mode_(mode), layout_(layout) {
    if (layout == Layout::Bpmf && mode == Mode::Phonetic && bpmf == nullptr) {
      throw std::invalid_argument("Bpmf layout needs a key map");
    }
  }

  Mode mode() const { return mode_; }
  Layout layout() const { return layout_; }
  const std::string& buffer() const { return buffer_; }
  const std::vector<TonedSyllable>& composed() const { return composed_; }
  const std::vector<Candidate>& candidates() const { return candidates_; }
  std::size_t selected() const { return selected_; }
  const std::string& output() const { return output_; }
  bool window_open() const { return !candidates_.empty(); }

  ValidationResult validation() const {
    return mode_ == Mode::Phonetic ? lex_->syllables().status(buffer_)
                                   : lex_->code_status(buffer_);
  }

  EngineEvent process_key(const KeyInput& k) {
    std::string delta;
    bool ok = false;
    switch (k.kind) {
      case KeyInput::Kind::Letter:
        ok = on_letter(k.letter);
        break;
      case KeyInput::Kind::ToneDiacritic:
        ok = on_tone(k.tone);
        break;
      case KeyInput::Kind::Delimiter:
        ok = on_delimiter(delta);
        break;
      case KeyInput::Kind::Backspace:
        ok = on_backspace();
        break;
      case KeyInput::Kind::CandidateSelect:
        ok = window_open() && k.index < candidates_.size();
        if (ok) commit_candidate(k.index, delta);
        break;
      case KeyInput::Kind::CandidateNext:
        ok = window_open() && selected_ + 1 < candidates_.size();
        if (ok) ++selected_;
        break;
      case KeyInput::Kind::CandidatePrev:
        ok = window_open() && selected_ > 0;
        if (ok) --selected_;
        break;
    }
    return event(ok, std::move(delta));
  }

  // The current state as a no-op event.
  EngineEvent snapshot() const { return event(false, {}); }

  bool operator==(const InputSession&) const = default;

 private:
  EngineEvent event(bool accepted, std::string delta) const {
    EngineEvent e;
    e.accepted = accepted;
    e.buffer_echo = buffer_;
    e.validation = validation();
    e.phonetic_portion = composed_;
    e.candidates = candidate_texts(candidates_);
    e.selected = selected_;
    e.committed_delta = std::move(delta);
    return e;
  }

  bool on_letter(char c) {
    if (window_open()) return false;
    std::string piece;
    if (mode_ == Mode::Phonetic && layout_ == Layout::Bpmf) {
      auto letters = bpmf_to_letters(*bpmf_, c);
      if (!letters) return false;
      piece = std::move(*letters);
    } else {
      if (c < 'a' || c > 'z') return false;
      piece.assign(1, c);
    }
    const std::string next = buffer_ + piece;
    if (mode_ == Mode::Stroke) {
      if (next.size() > kMaxCodeLength) return false;
      if (lex_->code_status(next) == ValidationResult::Invalid) return false;
    } else if (lex_->syllables().status(next) == ValidationResult::Invalid) {
      return false;
    }
    buffer_ = next;
    pieces_.push_back(static_cast<std::uint8_t>(piece.size()));
    return true;
  }

  bool on_tone(int tone) {
    if (mode_ != Mode::Phonetic || window_open()) return false;
    if (tone < 1 || tone > 5) return false;
    const auto& table = lex_->syllables();
    if (table.status(buffer_) != ValidationResult::Valid) return false;
    TonedSyllable syll{buffer_, tone};
    if (!table.is_abbreviation(buffer_) && !table.has_toned(syll)) return false;
    composed_.push_back(std::move(syll));
    clear_buffer();
    return true;
  }

  bool on_delimiter(std::string& delta) {
    if (window_open()) {
      commit_candidate(selected_, delta);
      return true;
    }
    if (mode_ == Mode::Stroke) {
      if (buffer_.empty()) {
        commit(" ", delta);
        return true;
      }
      if (lex_->code_status(buffer_) != ValidationResult::Valid) return false;
      const auto& cands = lex_->ranked_by_code(buffer_);
      if (cands.size() == 1) {
        commit(encode_utf8(cands.front().hanzi), delta);
        clear_buffer();
      } else {
        open_window(cands);
      }
      return true;
    }
    if (!buffer_.empty()) {
      if (lex_->syllables().status(buffer_) != ValidationResult::Valid) {
        return false;
      }
      composed_.push_back({buffer_, kNeutralTone});
      clear_buffer();
    }
    if (composed_.empty()) {
      commit(" ", delta);
      return true;
    }
    convert_pending(delta);
    return true;
  }

  bool on_backspace() {
    if (window_open()) {
      candidates_.clear();
      selected_ = 0;
      return true;
    }
    if (!pieces_.empty()) {
      buffer_.resize(buffer_.size() - pieces_.back());
      pieces_.pop_back();
      return true;
    }
    if (!composed_.empty()) {
      composed_.pop_back();
      return true;
    }
    return false;
  }

  void commit_candidate(std::size_t i, std::string& delta) {
    commit(encode_utf8(candidates_[i].hanzi), delta);
    candidates_.clear();
    selected_ = 0;
    if (mode_ == Mode::Stroke) {
      clear_buffer();
    } else {
      composed_.erase(composed_.begin());
      convert_pending(delta);
    }
  }

  // Commits leading syllables until one needs a choice or none remain.
  void convert_pending(std::string& delta) {
    while (!composed_.empty()) {
      auto cands = candidates_for(*lex_, composed_.front());
      if (cands.size() > 1) {
        open_window(std::move(cands));
        return;
      }
      commit(cands.empty() ? unconverted(composed_.front())
                           : encode_utf8(cands.front().hanzi),
             delta);
      composed_.erase(composed_.begin());
    }
  }

  void open_window(std::vector<Candidate> cands) {
    candidates_ = std::move(cands);
    selected_ = 0;
  }

  void commit(const std::string& text, std::string& delta) {
    output_ += text;
    delta += text;
  }

  void clear_buffer() {
    buffer_.clear();
    pieces_.clear();
  }

  const Lexicon* lex_;
  const BpmfLayout* bpmf_;
  Mode mode_;
  Layout layout_;
  std::string buffer_;
  std::vector<std::uint8_t> pieces_;  // letters contributed by each key
  std::vector<TonedSyllable> composed_;
  std::vector<Candidate> candidates_;
  std::size_t selected_ = 0;
  std::string output_;
};

inline InputSession new_session(const Lexicon& lex, Mode mode, Layout layout,
                                const BpmfLayout* bpmf = nullptr) {
  return InputSession(lex, mode, layout, bpmf);
}

inline EngineEvent process_key(InputSession& session, const KeyInput& k) {
  return session.process_key(k);
}

}  // namespace zhime

#endif  // ZHIME_SESSION_HPP_
