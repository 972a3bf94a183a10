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

#include "constat/predicate.h"

#include <string>

namespace constat {
namespace {

bool IsIngSurface(const Token& tok) {
  const std::string folded = FoldCase(tok.surface);
  return folded.size() >= 5 && folded.compare(folded.size() - 3, 3, "ing") == 0;
}

int NextNonPunct(const std::vector<Token>& tokens, int i, int limit) {
  for (int j = i + 1; j < limit; ++j)
    if (!tokens[j].is_punct) return j;
  return -1;
}

// Matches a word sequence as a lemma n-gram over non-punctuation tokens
// starting at i. Returns the last matched token index, or -1.
int MatchWordsAt(const std::vector<Token>& tokens, int i, int end,
                 const std::vector<std::string>& words) {
  int ti = i;
  int last = -1;
  for (const std::string& word : words) {
    while (ti < end && tokens[ti].is_punct) ++ti;
    if (ti >= end || tokens[ti].lemma != word) return -1;
    last = ti++;
  }
  return last;
}

std::string JoinWords(const std::vector<std::string>& words) {
  std::string joined;
  for (const std::string& word : words) {
    if (!joined.empty()) joined += ' ';
    joined += word;
  }
  return joined;
}

const LexiconEntry* FirstVerbEntry(const KnowledgeBase& kb,
                                   const std::string& lemma) {
  for (const LexiconEntry& entry : kb.entries())
    if (entry.lemma == lemma && IsVerbClass(entry.word_class)) return &entry;
  return nullptr;
}

}  // namespace

const char* AspectName(Aspect aspect) {
  switch (aspect) {
    case Aspect::kSimple: return "simple";
    case Aspect::kProgressive: return "progressive";
    case Aspect::kPluperfect: return "pluperfect";
    case Aspect::kIntentional: return "intentional";
  }
  return "simple";
}

std::vector<TokenMatch> FindClassMatches(const std::vector<Token>& tokens,
                                         int begin, int end,
                                         const KnowledgeBase& kb,
                                         WordClass word_class) {
  std::vector<TokenMatch> matches;
  int i = begin;
  while (i < end) {
    if (tokens[i].is_punct) {
      ++i;
      continue;
    }
    bool matched = false;
    for (const auto& words : kb.MultiwordLemmas(word_class)) {
      int last = MatchWordsAt(tokens, i, end, words);
      if (last < 0) continue;
      matches.push_back(
          TokenMatch{i, last + 1, kb.Find(JoinWords(words), word_class)});
      i = last + 1;
      matched = true;
      break;
    }
    if (matched) continue;
    if (const LexiconEntry* entry = kb.Find(tokens[i].lemma, word_class))
      matches.push_back(TokenMatch{i, i + 1, entry});
    ++i;
  }
  return matches;
}

bool HasClassToken(const std::vector<Token>& tokens, int begin, int end,
                   const KnowledgeBase& kb, WordClass word_class) {
  return !FindClassMatches(tokens, begin, end, kb, word_class).empty();
}

bool IsBareIng(const std::vector<Token>& tokens, int i) {
  if (!IsIngSurface(tokens[i])) return false;
  int seen = 0;
  for (int j = i - 1; j >= 0 && seen < 2; --j) {
    if (tokens[j].is_punct) continue;
    ++seen;
    if (tokens[j].lemma == "be" || tokens[j].lemma == "have") return false;
  }
  return true;
}

std::optional<PredicateInfo> FindPredicate(const std::vector<Token>& tokens,
                                           const Clause& clause,
                                           const KnowledgeBase& kb) {
  const int b = clause.begin_token;
  const int e = clause.end_token;
  PredicateInfo info;

  // Collision verbs and impact nouns take priority over any earlier verb.
  {
    auto collisions = FindClassMatches(tokens, b, e, kb, WordClass::kCollisionVerb);
    auto impacts = FindClassMatches(tokens, b, e, kb, WordClass::kImpactNoun);
    int best = -1;
    const LexiconEntry* best_entry = nullptr;
    for (const TokenMatch& m : collisions) {
      if (IsBareIng(tokens, m.begin)) continue;
      if (best < 0 || m.begin < best) {
        best = m.begin;
        best_entry = m.entry;
      }
    }
    for (const TokenMatch& m : impacts) {
      if (best < 0 || m.begin < best) {
        best = m.begin;
        best_entry = m.entry;
      }
    }
    if (best >= 0) {
      info.token = best;
      info.entry = best_entry;
    }
  }

  // Otherwise the first non-participial verb lexeme heads the clause; an
  // intention verb followed by "to" + verb promotes that verb instead.
  if (info.token < 0) {
    auto intents = FindClassMatches(tokens, b, e, kb, WordClass::kIntentionVerb);
    for (int i = b; i < e && info.token < 0; ++i) {
      if (tokens[i].is_punct) continue;
      const TokenMatch* intent = nullptr;
      for (const TokenMatch& m : intents)
        if (m.begin == i) intent = &m;
      if (intent != nullptr) {
        int to = NextNonPunct(tokens, intent->end - 1, e);
        if (to >= 0 && tokens[to].lemma == "to") {
          int verb = NextNonPunct(tokens, to, e);
          const LexiconEntry* verb_entry =
              verb >= 0 ? FirstVerbEntry(kb, tokens[verb].lemma) : nullptr;
          if (verb_entry != nullptr) {
            info.token = verb;
            info.entry = verb_entry;
            info.aspect = Aspect::kIntentional;
            info.intention_token = intent->begin;
            break;
          }
        }
      }
      if (IsBareIng(tokens, i)) continue;
      if (const LexiconEntry* entry = FirstVerbEntry(kb, tokens[i].lemma)) {
        info.token = i;
        info.entry = entry;
      }
    }
  }

  if (info.token < 0) return std::nullopt;

  for (int i = b; i < info.token; ++i) {
    if (tokens[i].is_punct) continue;
    if (kb.HasClass(tokens[i].lemma, WordClass::kNegationMarker))
      info.negated = true;
  }
  for (int i = b; i < e; ++i) {
    if (tokens[i].is_punct) continue;
    if (kb.HasClass(tokens[i].lemma, WordClass::kAbilityModal))
      info.ability = true;
  }
  if (info.aspect == Aspect::kSimple) {
    bool have_before = false;
    bool be_before = false;
    for (int i = b; i < info.token; ++i) {
      if (tokens[i].lemma == "have") have_before = true;
      if (tokens[i].lemma == "be") be_before = true;
    }
    if (have_before)
      info.aspect = Aspect::kPluperfect;
    else if (be_before && IsIngSurface(tokens[info.token]))
      info.aspect = Aspect::kProgressive;
  }
  return info;
}

}  // namespace constat
