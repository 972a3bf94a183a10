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

#ifndef CONSTAT_CORPUS_H_
#define CONSTAT_CORPUS_H_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "constat/knowledge.h"

// Claim-report texts and their shallow segmentation into sentences, clauses
// and tokens. Tokenization is lossless: token spans are exact character
// offsets into the body, clitics are split with split spans, and no token is
// ever dropped by clause segmentation.

namespace constat {

struct Report {
  std::string id;        // e.g. "T8"
  std::string language;  // "en" or "fr"
  std::string body;
};

struct Token {
  std::string surface;  // exact body substring [begin, end)
  std::string lemma;    // folded surface, irregular form or clitic lemma
  size_t begin = 0;
  size_t end = 0;
  bool is_punct = false;
};

// Contiguous token range [begin_token, end_token) of one clause.
struct Clause {
  int sentence_index = 0;
  int clause_index = 0;  // within the sentence
  int begin_token = 0;
  int end_token = 0;
};

struct Segmentation {
  std::vector<Token> tokens;
  std::vector<Clause> clauses;
};

// Fixed morphology tables. The analyzer performs no morphology beyond
// lowercase folding plus these two tables.
class Morphology {
 public:
  // contractions: clitic-suffix <TAB> lemma   (e.g. n't -> not)
  // irregulars:   surface <TAB> lemma         (e.g. struck -> strike)
  static Morphology Load(const std::string& contractions_path,
                         const std::string& irregulars_path);

  // Clitic suffixes, longest first, with their lemmas.
  const std::vector<std::pair<std::string, std::string>>& contractions() const {
    return contractions_;
  }

  // Lemma for a folded surface form; falls back to the form itself.
  const std::string& LemmaOf(const std::string& folded_surface) const;

 private:
  std::vector<std::pair<std::string, std::string>> contractions_;
  std::map<std::string, std::string> irregulars_;
};

// Reads a report from disk. The id is the file stem up to the first dot and
// the language comes from a ".en"/".fr" infix (default "en").
Report LoadReport(const std::string& path);

std::vector<Token> Tokenize(std::string_view body, const Morphology& morph);

// Sentences split on . ? ! ; (with an abbreviation guard); clauses split on
// coordinating conjunctions, comma boundaries followed by a finite-verb
// region, and participial boundaries. Token-preserving: clauses partition
// the non-terminal tokens of each sentence.
Segmentation Segment(const Report& report, const Morphology& morph,
                     const KnowledgeBase& kb);

// Clause text helpers.
std::string ClauseText(const Segmentation& seg, const Clause& clause,
                       const Report& report);

}  // namespace constat

#endif  // CONSTAT_CORPUS_H_
