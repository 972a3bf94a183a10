// Copyright 2026 The Constat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <string>
#include <vector>

#include "constat/corpus.h"
#include "doctest.h"
#include "support/testdata.h"

namespace {

using constat::Clause;
using constat::ClauseText;
using constat::LoadReport;
using constat::Report;
using constat::Segment;
using constat::Segmentation;
using constat::Token;
using constat::Tokenize;
using constat_test::Bundle;
using constat_test::CorpusDir;
using constat_test::MakeReport;
using constat_test::WriteTemp;

std::vector<std::string> ClauseTexts(const std::string& body) {
  Report report = MakeReport(body);
  Segmentation seg = Segment(report, Bundle().morphology, Bundle().kb);
  std::vector<std::string> texts;
  for (const Clause& clause : seg.clauses) {
    texts.push_back(ClauseText(seg, clause, report));
  }
  return texts;
}

TEST_CASE("report files carry id and language in their names") {
  Report t8 = LoadReport(CorpusDir() + "/T8.en.txt");
  CHECK(t8.id == "T8");
  CHECK(t8.language == "en");
  CHECK_FALSE(t8.body.empty());

  std::string fr = WriteTemp("X1.fr.txt", "phrase\n");
  Report x1 = LoadReport(fr);
  CHECK(x1.id == "X1");
  CHECK(x1.language == "fr");

  std::string plain = WriteTemp("Y.txt", "text\n");
  CHECK(LoadReport(plain).language == "en");
  CHECK_THROWS(LoadReport(CorpusDir() + "/absent.en.txt"));
}

TEST_CASE("token spans reproduce the body bytes exactly") {
  for (const auto& entry :
       std::filesystem::directory_iterator(CorpusDir())) {
    if (entry.path().extension() != ".txt") continue;
    Report report = LoadReport(entry.path().string());
    std::vector<Token> tokens = Tokenize(report.body, Bundle().morphology);
    size_t previous_end = 0;
    for (const Token& token : tokens) {
      CHECK(token.begin < token.end);
      CHECK(token.begin >= previous_end);
      CHECK(report.body.substr(token.begin, token.end - token.begin) ==
            token.surface);
      previous_end = token.end;
    }
  }
}

TEST_CASE("clitic suffixes split with exact spans and lemmas") {
  std::vector<Token> tokens =
      Tokenize("I hadn't stopped.", Bundle().morphology);
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[1].surface == "had");
  CHECK(tokens[1].lemma == "have");
  CHECK(tokens[1].begin == 2);
  CHECK(tokens[1].end == 5);
  CHECK(tokens[2].surface == "n't");
  CHECK(tokens[2].lemma == "not");
  CHECK(tokens[2].begin == 5);
  CHECK(tokens[2].end == 8);
  CHECK(tokens[3].lemma == "stop");
  CHECK(tokens[4].is_punct);
}

TEST_CASE("irregular forms map to their lemmas") {
  std::vector<Token> tokens =
      Tokenize("The car struck us and was thrown.", Bundle().morphology);
  CHECK(tokens[2].surface == "struck");
  CHECK(tokens[2].lemma == "strike");
  CHECK(tokens[5].lemma == "be");
  CHECK(tokens[6].lemma == "throw");
}

TEST_CASE("unknown words fold to lowercase lemmas") {
  std::vector<Token> tokens =
      Tokenize("Mrs.Glorieux's vehicle", Bundle().morphology);
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].surface == "Mrs");
  CHECK(tokens[1].is_punct);
  CHECK(tokens[2].surface == "Glorieux");
  CHECK(tokens[2].lemma == "glorieux");
  CHECK(tokens[3].surface == "'s");
  CHECK(tokens[4].lemma == "vehicle");
}

TEST_CASE("single clause for a bare coordinated fragment") {
  auto texts = ClauseTexts(
      "but I hit the second car which hadn't yet gone through the "
      "stop-sign.");
  REQUIRE(texts.size() == 1);
}

TEST_CASE("abbreviation periods do not end sentences") {
  auto texts = ClauseTexts("Mrs.Glorieux's vehicle was at a distance.");
  REQUIRE(texts.size() == 1);
  auto split = ClauseTexts("It stopped. Dr. Then it started.");
  CHECK(split.size() == 2);
}

TEST_CASE("clauses split on when and on coordination after a finite verb") {
  auto texts = ClauseTexts(
      "I was driving on the right hand side of the road when a vehicle "
      "arriving in front of me in the curve was completely thrown off "
      "course. Keeping as close as possible to the right, I wasn't able to "
      "avoid the car which was coming with great speed.");
  REQUIRE(texts.size() == 4);
  CHECK(texts[0] == "I was driving on the right hand side of the road");
  CHECK(texts[1] ==
        "when a vehicle arriving in front of me in the curve was "
        "completely thrown off course.");
  CHECK(texts[2] == "Keeping as close as possible to the right,");
  CHECK(texts[3] ==
        "I wasn't able to avoid the car which was coming with great "
        "speed.");
}

TEST_CASE("participial comma boundaries open new clauses") {
  auto texts = ClauseTexts(
      "Wanting to pass a hauler with its right blinker on, the latter "
      "turned left, forcing me to steer left to avoid it.");
  REQUIRE(texts.size() == 3);
  CHECK(texts[0] == "Wanting to pass a hauler with its right blinker on,");
  CHECK(texts[1] == "the latter turned left,");
  CHECK(texts[2] == "forcing me to steer left to avoid it.");
}

TEST_CASE("comma splits need a nearby finite verb") {
  // "at moderate speed, about 40 km/h," has no finite verb after either
  // comma, so the first clause runs to the "when" boundary.
  auto texts = ClauseTexts(
      "Vehicle B coming from my left, I find myself at the intersection, "
      "at moderate speed, about 40 km/h, when vehicle B hits my vehicle, "
      "and denies me the right-of-way from the right.");
  REQUIRE(texts.size() == 3);
  CHECK(texts[0] ==
        "Vehicle B coming from my left, I find myself at the intersection, "
        "at moderate speed, about 40 km/h,");
  CHECK(texts[1] == "when vehicle B hits my vehicle,");
  CHECK(texts[2] == "and denies me the right-of-way from the right.");
}

TEST_CASE("for only splits before an existential there") {
  auto texts = ClauseTexts(
      "I wasn't expecting a driver would wish to pass me for there weren't "
      "two lanes marked on the portion of the road where I was stopped.");
  REQUIRE(texts.size() == 2);
  CHECK(texts[1] ==
        "for there weren't two lanes marked on the portion of the road "
        "where I was stopped.");
  auto no_split = ClauseTexts("leaving the first one free for it.");
  CHECK(no_split.size() == 1);
}

TEST_CASE("semicolons end sentences") {
  auto texts = ClauseTexts("I was at a stop and getting ready to change "
                           "lanes; the road was wet.");
  REQUIRE(texts.size() == 3);
  CHECK(texts[0] == "I was at a stop");
  CHECK(texts[1] == "and getting ready to change lanes;");
  CHECK(texts[2] == "the road was wet.");
}

TEST_CASE("clauses partition each sentence's tokens in order") {
  for (const auto& entry :
       std::filesystem::directory_iterator(CorpusDir())) {
    if (entry.path().extension() != ".txt") continue;
    Report report = LoadReport(entry.path().string());
    Segmentation seg = Segment(report, Bundle().morphology, Bundle().kb);
    for (size_t i = 0; i < seg.clauses.size(); ++i) {
      const Clause& clause = seg.clauses[i];
      CHECK(clause.begin_token < clause.end_token);
      if (i > 0) {
        const Clause& previous = seg.clauses[i - 1];
        CHECK(clause.begin_token >= previous.end_token);
        if (clause.sentence_index == previous.sentence_index) {
          CHECK(clause.clause_index == previous.clause_index + 1);
        } else {
          CHECK(clause.clause_index == 0);
        }
      }
    }
  }
}

TEST_CASE("empty bodies segment to nothing") {
  Report report = MakeReport("");
  Segmentation seg = Segment(report, Bundle().morphology, Bundle().kb);
  CHECK(seg.tokens.empty());
  CHECK(seg.clauses.empty());
}

}  // namespace
