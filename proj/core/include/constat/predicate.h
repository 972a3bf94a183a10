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

#ifndef CONSTAT_PREDICATE_H_
#define CONSTAT_PREDICATE_H_

#include <optional>
#include <vector>

#include "constat/corpus.h"
#include "constat/knowledge.h"

// Lexeme matching over token sequences and per-clause predicate selection.
// Multi-word lexemes match as lemma n-grams over non-punctuation tokens, so
// "right-of-way" still matches the lexeme "right of way".

namespace constat {

// One lexeme occurrence: token span [begin, end) including any punctuation
// between the matched words.
struct TokenMatch {
  int begin = 0;
  int end = 0;
  const LexiconEntry* entry = nullptr;
};

// All occurrences of lexemes of a class inside [begin, end), left to right,
// longest lexeme first at each position, non-overlapping per class.
std::vector<TokenMatch> FindClassMatches(const std::vector<Token>& tokens,
                                         int begin, int end,
                                         const KnowledgeBase& kb,
                                         WordClass word_class);

bool HasClassToken(const std::vector<Token>& tokens, int begin, int end,
                   const KnowledgeBase& kb, WordClass word_class);

// True for a bare -ing form: surface ends in -ing with no be/have auxiliary
// among the two previous non-punctuation tokens. Bare -ing tokens are
// participial and never head a clause predicate.
bool IsBareIng(const std::vector<Token>& tokens, int i);

enum class Aspect { kSimple, kProgressive, kPluperfect, kIntentional };

const char* AspectName(Aspect aspect);

struct PredicateInfo {
  int token = -1;                        // head token index
  const LexiconEntry* entry = nullptr;   // head lexicon entry
  bool negated = false;                  // negation marker before the head
  bool ability = false;                  // ability modal in the clause
  Aspect aspect = Aspect::kSimple;
  int intention_token = -1;              // intention verb when intentional
};

// Selects the single predicate of a clause, or nullopt for verbless clauses.
// Collision verbs and impact nouns take priority; otherwise the first
// non-participial verb lexeme wins, and an intention verb followed by
// "to" + verb yields that verb with intentional aspect.
std::optional<PredicateInfo> FindPredicate(const std::vector<Token>& tokens,
                                           const Clause& clause,
                                           const KnowledgeBase& kb);

}  // namespace constat

#endif  // CONSTAT_PREDICATE_H_
