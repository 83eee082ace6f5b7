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

// Shared reader for the line-oriented data files: dictionary, syllable
// table, radical map, decompositions, stroke varieties and BPMF layouts.

#ifndef ZHIME_TEXT_FILE_HPP_
#define ZHIME_TEXT_FILE_HPP_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zhime/utf8.hpp"

namespace zhime {

// Raised for any malformed data file. what() reads "source:line: rule".
class LoadError : public std::runtime_error {
 public:
  LoadError(std::string source, std::size_t line, std::string rule)
      : std::runtime_error(format(source, line, rule)),
        source_(std::move(source)),
        line_(line),
        rule_(std::move(rule)) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  const std::string& rule() const { return rule_; }

 private:
  static std::string format(const std::string& source, std::size_t line,
                            const std::string& rule) {
    std::ostringstream os;
    os << source;
    if (line > 0) os << ':' << line;
    os << ": " << rule;
    return os.str();
  }

  std::string source_;
  std::size_t line_;
  std::string rule_;
};

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Calls fn(line_number, line) for each data line, skipping blank lines and
// '#' comments. Line numbers are 1-based and count every physical line.
template <typename Fn>
void for_each_data_line(std::string_view content, const std::string& source,
                        Fn&& fn) {
  if (content.starts_with("\xEF\xBB\xBF")) content.remove_prefix(3);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    ++line_no;
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    pos = end + 1;
    if (line.find('\r') != std::string_view::npos) {
      throw LoadError(source, line_no, "CR line endings are not allowed");
    }
    if (!decode_utf8(line)) {
      throw LoadError(source, line_no, "invalid UTF-8");
    }
    if (line.empty() || line.front() == '#') continue;
    fn(line_no, line);
  }
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      return parts;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

}  // namespace zhime

#endif  // ZHIME_TEXT_FILE_HPP_
