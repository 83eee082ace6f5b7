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

#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_paths.hpp"
#include "zhime/lexicon.hpp"

namespace zhime {
namespace {

using testing_paths::bundled_lexicon;
using testing_paths::data;
using testing_paths::fixture;

Lexicon load_with(const std::string& dict) {
  return load_lexicon(dict, data("syllables.txt"), data("radicals.tsv"));
}

std::string load_error(const std::string& dict_text) {
  const auto table = load_syllable_table(data("syllables.txt"));
  try {
    parse_dictionary(dict_text, "dict.tsv", table);
  } catch (const LoadError& e) {
    return e.what();
  }
  return {};
}

TEST(LoadLexicon, BundledFixtureHasOneEntryPerLine) {
  const auto rows = oracle::read_dictionary(data("dict.tsv"));
  EXPECT_EQ(rows.size(), 100u);
  EXPECT_EQ(bundled_lexicon().entries().size(), rows.size());
  EXPECT_EQ(bundled_lexicon().radicals().radicals().size(), 26u);
}

TEST(LoadLexicon, EmptyDictionary) {
  const auto lex = load_with(fixture("dict_empty.tsv"));
  EXPECT_TRUE(lex.entries().empty());
  const TonedSyllable ma1{"ma", 1};
  EXPECT_TRUE(lex.lookup_by_reading({&ma1, 1}).empty());
  EXPECT_TRUE(lex.lookup_by_code(StrokeCode("g")).empty());
  EXPECT_EQ(lex.code_status("g"), ValidationResult::Invalid);
}

TEST(LoadLexicon, FiveLetterCodeIsRejected) {
  const auto msg = load_error("一\tyi1\t1\tabcde\n");
  EXPECT_NE(msg.find("dict.tsv:1"), std::string::npos) << msg;
  EXPECT_NE(msg.find("four letters"), std::string::npos) << msg;
}

TEST(LoadLexicon, MalformedLinesNameFileAndLine) {
  EXPECT_NE(load_error("一\tyi1\t1\n一\tyi1\t2\n").find("dict.tsv:2: duplicate"),
            std::string::npos);
  EXPECT_NE(load_error("一\tyi1\t1\nab\tyi1\t2\n").find(":2:"), std::string::npos);
  EXPECT_NE(load_error("a\tyi1\t1\n").find("CJK"), std::string::npos);
  EXPECT_NE(load_error("一\tyi6\t1\n").find("reading"), std::string::npos);
  EXPECT_NE(load_error("一\tqx1\t1\n").find("not in the syllable table"),
            std::string::npos);
  EXPECT_NE(load_error("一\t\t1\n").find("reading"), std::string::npos);
  EXPECT_NE(load_error("一\tyi1\t-3\n").find("frequency"), std::string::npos);
  EXPECT_NE(load_error("一\tyi1\t1\tG\n").find("a-z"), std::string::npos);
  EXPECT_NE(load_error("一\tyi1,yi1\t1\n").find("duplicate reading"),
            std::string::npos);
  EXPECT_NE(load_error("一\tyi1\n").find(":1:"), std::string::npos);
  // Same hanzi on another line with a different reading is fine.
  EXPECT_EQ(load_error("一\tyi1\t1\n一\tyi2\t1\n"), "");
}

TEST(LoadLexicon, RadicalMapMustBeBijective) {
  std::string text;
  for (int i = 0; i < 26; ++i) {
    text += "r" + std::to_string(i) + "\t" + static_cast<char>('a' + i) + "\t1\n";
  }
  EXPECT_NO_THROW(parse_radical_map(text, "r"));

  auto dup = text;
  dup.replace(dup.find("\tb\t"), 3, "\ta\t");
  try {
    parse_radical_map(dup, "r.tsv");
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("bijective"), std::string::npos);
  }
  EXPECT_THROW(parse_radical_map(text.substr(0, text.rfind("r25")), "r"),
               LoadError);
  auto bad_class = text;
  bad_class.replace(bad_class.find("\ta\t1"), 4, "\ta\t7");
  EXPECT_THROW(parse_radical_map(bad_class, "r"), LoadError);
}

TEST(LookupByReading, MatchesLinearScan) {
  const auto rows = oracle::read_dictionary(data("dict.tsv"));
  const TonedSyllable ma1{"ma", 1};
  EXPECT_EQ(bundled_lexicon().lookup_by_reading({&ma1, 1}),
            oracle::hanzi_for_reading(rows, "ma1"));
  EXPECT_EQ(bundled_lexicon().lookup_by_reading({&ma1, 1}),
            std::vector<std::string>{"妈"});

  const TonedSyllable shi4{"shi", 4};
  EXPECT_EQ(bundled_lexicon().lookup_by_reading({&shi4, 1}),
            (std::vector<std::string>{"是", "事", "市", "试"}));
}

TEST(LookupByReading, AbsentReading) {
  const TonedSyllable s{"zhuang", 4};
  EXPECT_TRUE(bundled_lexicon().lookup_by_reading({&s, 1}).empty());
}

TEST(LookupByReading, HigherFrequencyFirstThenScalar) {
  const auto lex = load_with(fixture("dict_collision.tsv"));
  const TonedSyllable yi1{"yi", 1};
  EXPECT_EQ(lex.lookup_by_reading({&yi1, 1}), (std::vector<std::string>{"一", "衣"}));

  // 诗 U+8BD7 and 师 U+5E08 share shi1 at weight 200.
  const TonedSyllable shi1{"shi", 1};
  EXPECT_EQ(bundled_lexicon().lookup_by_reading({&shi1, 1}),
            (std::vector<std::string>{"师", "诗"}));
}

TEST(LookupByCode, Examples) {
  const auto lex = load_with(fixture("dict_collision.tsv"));
  EXPECT_EQ(lex.lookup_by_code(StrokeCode("g")), std::vector<std::string>{"一"});
  EXPECT_TRUE(lex.lookup_by_code(StrokeCode("zzzz")).empty());
  EXPECT_EQ(lex.lookup_by_code(StrokeCode("w")), (std::vector<std::string>{"人", "入"}));
}

TEST(LookupByCode, CodePrefixStatus) {
  const auto& lex = bundled_lexicon();
  EXPECT_EQ(lex.code_status(""), ValidationResult::ValidPrefix);
  EXPECT_EQ(lex.code_status("knng"), ValidationResult::Valid);
  EXPECT_EQ(lex.code_status("knn"), ValidationResult::ValidPrefix);
  EXPECT_EQ(lex.code_status("qq"), ValidationResult::Invalid);
}

TEST(LexiconProperties, EveryEntryIsFoundThroughItsIndexes) {
  for (const auto& path : {data("dict.tsv"), fixture("dict_collision.tsv")}) {
    const auto lex = load_with(path);
    const auto rows = oracle::read_dictionary(path);
    for (const auto& e : lex.entries()) {
      for (const auto& r : e.readings) {
        const auto hits = lex.lookup_by_reading({&r, 1});
        EXPECT_NE(std::find(hits.begin(), hits.end(), e.text()), hits.end());
        EXPECT_EQ(hits, oracle::hanzi_for_reading(rows, r.to_string()));
      }
      if (e.stroke_code) {
        const auto hits = lex.lookup_by_code(*e.stroke_code);
        EXPECT_EQ(std::set<std::string>(hits.begin(), hits.end()),
                  oracle::hanzi_for_code(rows, e.stroke_code->letters()));
      }
    }
  }
}

TEST(LexiconProperties, CandidateListsAreRanked) {
  const auto& lex = bundled_lexicon();
  auto check = [](const std::vector<Candidate>& cands) {
    for (std::size_t i = 1; i < cands.size(); ++i) {
      ASSERT_GE(cands[i - 1].frequency, cands[i].frequency);
      if (cands[i - 1].frequency == cands[i].frequency) {
        ASSERT_LT(cands[i - 1].hanzi, cands[i].hanzi);
      }
    }
  };
  for (const auto& s : lex.syllables().toned_syllables()) check(lex.ranked_by_reading(s));
  for (const auto& [code, cands] : lex.code_groups()) check(cands);
}

TEST(LexiconProperties, LoadingIsDeterministic) {
  const auto a = load_with(data("dict.tsv"));
  const auto b = load_with(data("dict.tsv"));
  EXPECT_EQ(a.entries(), b.entries());
  for (const auto& s : a.syllables().toned_syllables()) {
    ASSERT_EQ(a.ranked_by_reading(s), b.ranked_by_reading(s));
  }
  EXPECT_EQ(a.code_groups(), b.code_groups());
  // Rebuilding from the entries alone gives the same indexes.
  const Lexicon c(a.entries(), a.syllables(), a.radicals());
  EXPECT_EQ(c.code_groups(), a.code_groups());
}

TEST(StrokeCodeType, Validation) {
  EXPECT_TRUE(StrokeCode::parse("abcd"));
  EXPECT_FALSE(StrokeCode::parse("abcde"));
  EXPECT_FALSE(StrokeCode::parse(""));
  EXPECT_FALSE(StrokeCode::parse("aB"));
  EXPECT_THROW(StrokeCode("12"), std::invalid_argument);
}

}  // namespace
}  // namespace zhime
