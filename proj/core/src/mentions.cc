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

#include "constat/mentions.h"

#include <algorithm>
#include <set>

#include "constat/predicate.h"

namespace constat {

const char* PartyMarkName(PartyMark mark) {
  switch (mark) {
    case PartyMark::kUnmarked: return "unmarked";
    case PartyMark::kWriter: return "writer";
    case PartyMark::kOther: return "other";
  }
  return "unmarked";
}

const char* FacetName(Facet facet) {
  switch (facet) {
    case Facet::kUnknown: return "unknown";
    case Facet::kDriver: return "driver";
    case Facet::kPassengerGroup: return "passenger-group";
    case Facet::kVehicle: return "vehicle";
    case Facet::kPart: return "part";
    case Facet::kPerson: return "person";
  }
  return "unknown";
}

const char* RoleName(Role role) {
  switch (role) {
    case Role::kUnknown: return "unknown";
    case Role::kSubject: return "subject";
    case Role::kObject: return "object";
    case Role::kOblique: return "oblique";
  }
  return "unknown";
}

namespace {

bool InSet(const std::set<std::string>& set, const std::string& s) {
  return set.count(s) > 0;
}

// Closed-class words that terminate the leftward premodifier walk.
const std::set<std::string>& FunctionWords() {
  static const std::set<std::string> kWords = {
      "of",    "in",    "on",      "at",     "from",    "with",  "to",
      "by",    "for",   "into",    "onto",   "before",  "after", "around",
      "between", "through", "about", "as",   "than",    "then",  "while",
      "where", "which", "who",     "whom",   "whose",   "whence", "and",
      "but",   "or",    "so",      "because", "if",     "though", "since",
      "until", "over",  "under",   "behind", "near",    "off",   "out",
      "up",    "down",  "against", "according", "when"};
  return kWords;
}

const std::set<std::string>& FirstPersonPronouns() {
  static const std::set<std::string> kSet = {"i", "me", "we", "us"};
  return kSet;
}

const std::set<std::string>& PluralPronouns() {
  static const std::set<std::string> kSet = {"we", "us", "they", "them"};
  return kSet;
}

const std::set<std::string>& WriterPossessives() {
  static const std::set<std::string> kSet = {"my", "our"};
  return kSet;
}

const std::set<std::string>& OtherPossessives() {
  static const std::set<std::string> kSet = {"his", "her", "its", "their"};
  return kSet;
}

const std::set<std::string>& Abbreviations() {
  static const std::set<std::string> kSet = {"mr", "mrs", "dr", "st"};
  return kSet;
}

const LexiconEntry* NounEntry(const KnowledgeBase& kb,
                              const std::string& lemma) {
  for (WordClass wc : {WordClass::kVehicleNoun, WordClass::kPersonNoun,
                       WordClass::kPartNoun}) {
    if (const LexiconEntry* entry = kb.Find(lemma, wc)) return entry;
  }
  return nullptr;
}

int NextNonPunct(const std::vector<Token>& tokens, int i, int limit) {
  for (int j = i + 1; j < limit; ++j)
    if (!tokens[j].is_punct) return j;
  return -1;
}

int PrevNonPunct(const std::vector<Token>& tokens, int i) {
  for (int j = i - 1; j >= 0; --j)
    if (!tokens[j].is_punct) return j;
  return -1;
}

bool IsPlural(const Token& tok, const LexiconEntry& entry) {
  // Noun irregulars map plural surfaces onto singular lemmas, so a folded
  // surface differing from the entry lemma marks a plural.
  return FoldCase(tok.surface) != entry.lemma;
}

bool IsLabelToken(const Token& tok) {
  return !tok.is_punct && tok.surface.size() == 1 && tok.surface[0] >= 'A' &&
         tok.surface[0] <= 'Z';
}

std::string SpanText(const std::vector<Token>& tokens, int begin, int end,
                     const Report& report) {
  if (begin >= end) return "";
  return report.body.substr(tokens[begin].begin,
                            tokens[end - 1].end - tokens[begin].begin);
}

}  // namespace

std::vector<Mention> ExtractMentions(const Segmentation& seg,
                                     const Report& report,
                                     const KnowledgeBase& kb) {
  const std::vector<Token>& tokens = seg.tokens;
  std::vector<Mention> mentions;

  for (size_t ci = 0; ci < seg.clauses.size(); ++ci) {
    const Clause& clause = seg.clauses[ci];
    int i = clause.begin_token;
    while (i < clause.end_token) {
      const Token& tok = tokens[i];
      if (tok.is_punct) {
        ++i;
        continue;
      }

      // Partitive "one of the <noun>s": one indefinite singular mention.
      if (tok.lemma == "one") {
        int of = NextNonPunct(tokens, i, clause.end_token);
        if (of >= 0 && tokens[of].lemma == "of") {
          int k = NextNonPunct(tokens, of, clause.end_token);
          if (k >= 0 && kb.HasClass(tokens[k].lemma, WordClass::kDeterminer))
            k = NextNonPunct(tokens, k, clause.end_token);
          const LexiconEntry* inner =
              k >= 0 ? NounEntry(kb, tokens[k].lemma) : nullptr;
          if (inner != nullptr) {
            Mention m;
            m.begin = i;
            m.end = k + 1;
            m.head = k;
            m.clause = static_cast<int>(ci);
            m.indefinite = true;
            if (inner->word_class == WordClass::kVehicleNoun) {
              m.vehicle_concept = inner->concept_name;
              m.facet = Facet::kVehicle;
            } else if (inner->word_class == WordClass::kPersonNoun) {
              m.person_concept = inner->concept_name;
              m.facet = inner->concept_name == "driver" ? Facet::kDriver
                                                   : Facet::kPerson;
            } else {
              m.part_concept = inner->concept_name;
              m.facet = Facet::kPart;
              if (const std::string* whole =
                      kb.hierarchy().WholeOf(inner->concept_name))
                m.vehicle_concept = *whole;
            }
            int prev = PrevNonPunct(tokens, m.begin);
            m.after_ing = prev >= 0 && IsBareIng(tokens, prev);
            m.surface = SpanText(tokens, m.begin, m.end, report);
            mentions.push_back(m);
            i = k + 1;
            continue;
          }
        }
        ++i;
        continue;
      }

      if (kb.HasClass(tok.lemma, WordClass::kPronoun)) {
        Mention m;
        m.begin = i;
        m.end = i + 1;
        m.head = i;
        m.clause = static_cast<int>(ci);
        m.pronoun = true;
        m.first_person = InSet(FirstPersonPronouns(), tok.lemma);
        m.plural_pronoun = InSet(PluralPronouns(), tok.lemma);
        if (m.first_person) {
          m.party = PartyMark::kWriter;
          m.facet = m.plural_pronoun ? Facet::kPassengerGroup : Facet::kDriver;
        }
        int prev = PrevNonPunct(tokens, i);
        m.after_ing = prev >= 0 && IsBareIng(tokens, prev);
        m.surface = SpanText(tokens, m.begin, m.end, report);
        mentions.push_back(m);
        ++i;
        continue;
      }

      const LexiconEntry* entry = NounEntry(kb, tok.lemma);
      if (entry == nullptr) {
        ++i;
        continue;
      }

      // Head: last noun of an adjacent noun run (compounds such as
      // "truck driver" or "side mirror").
      int head = i;
      const LexiconEntry* head_entry = entry;
      while (head + 1 < clause.end_token && !tokens[head + 1].is_punct) {
        const LexiconEntry* next_entry = NounEntry(kb, tokens[head + 1].lemma);
        if (next_entry == nullptr) break;
        ++head;
        head_entry = next_entry;
      }

      // Plural heads are generic references; skip them.
      if (IsPlural(tokens[head], *head_entry)) {
        i = head + 1;
        continue;
      }

      Mention m;
      m.head = head;
      m.clause = static_cast<int>(ci);
      int end = head + 1;

      if (head_entry->word_class == WordClass::kVehicleNoun) {
        m.vehicle_concept = head_entry->concept_name;
        m.facet = Facet::kVehicle;
      } else if (head_entry->word_class == WordClass::kPersonNoun) {
        m.person_concept = head_entry->concept_name;
        m.facet =
            head_entry->concept_name == "driver" ? Facet::kDriver : Facet::kPerson;
      } else {
        m.part_concept = head_entry->concept_name;
        m.facet = Facet::kPart;
        if (const std::string* whole =
                kb.hierarchy().WholeOf(head_entry->concept_name))
          m.vehicle_concept = *whole;
      }

      // Compound modifiers inside the noun run contribute the vehicle axis.
      for (int j = i; j < head; ++j) {
        if (const LexiconEntry* mod = kb.Find(tokens[j].lemma,
                                              WordClass::kVehicleNoun))
          m.vehicle_concept = mod->concept_name;
      }

      // Unit label directly after a vehicle noun: "vehicle B".
      if (head_entry->word_class == WordClass::kVehicleNoun &&
          end < clause.end_token && IsLabelToken(tokens[end])) {
        m.label = tokens[end].surface;
        ++end;
      }

      // "driver of vehicle B": absorb the vehicle as the mention's vehicle
      // axis instead of a second mention.
      if (head_entry->word_class == WordClass::kPersonNoun) {
        int of = NextNonPunct(tokens, end - 1, clause.end_token);
        if (of >= 0 && tokens[of].lemma == "of") {
          int k = NextNonPunct(tokens, of, clause.end_token);
          if (k >= 0 && kb.HasClass(tokens[k].lemma, WordClass::kDeterminer))
            k = NextNonPunct(tokens, k, clause.end_token);
          const LexiconEntry* inner =
              k >= 0 ? kb.Find(tokens[k].lemma, WordClass::kVehicleNoun)
                     : nullptr;
          if (inner != nullptr && !IsPlural(tokens[k], *inner)) {
            m.vehicle_concept = inner->concept_name;
            end = k + 1;
            if (end < clause.end_token && IsLabelToken(tokens[end])) {
              m.label = tokens[end].surface;
              ++end;
            }
          }
        }
      }

      // Premodifier walk: determiners, genitives, unknown modifier words.
      int begin = i;
      bool genitive = false;
      while (begin - 1 >= clause.begin_token) {
        const Token& p = tokens[begin - 1];
        if (p.is_punct) {
          // Cross "Mrs." style abbreviation periods only.
          if (p.surface == "." && begin - 2 >= clause.begin_token &&
              InSet(Abbreviations(), tokens[begin - 2].lemma)) {
            begin -= 2;
            continue;
          }
          break;
        }
        if (p.lemma == "'s") {
          genitive = true;
          --begin;
          continue;
        }
        if (kb.HasClass(p.lemma, WordClass::kDeterminer)) {
          --begin;
          continue;
        }
        if (!kb.Lookup(p.lemma).empty()) break;
        if (InSet(FunctionWords(), p.lemma)) break;
        --begin;
      }
      m.begin = begin;
      m.end = end;

      for (int j = begin; j < head; ++j) {
        const std::string& lemma = tokens[j].lemma;
        if (InSet(WriterPossessives(), lemma)) m.party = PartyMark::kWriter;
      }
      if (m.party == PartyMark::kUnmarked) {
        for (int j = begin; j < head; ++j) {
          const std::string& lemma = tokens[j].lemma;
          if (InSet(OtherPossessives(), lemma) || (genitive && lemma == "'s"))
            m.party = PartyMark::kOther;
        }
      }
      for (int j = begin; j <= head; ++j) {
        if (!kb.HasClass(tokens[j].lemma, WordClass::kDeterminer)) continue;
        m.indefinite = tokens[j].lemma == "a" || tokens[j].lemma == "an";
        break;
      }

      int prev = PrevNonPunct(tokens, begin);
      m.after_ing = prev >= 0 && IsBareIng(tokens, prev);
      m.surface = SpanText(tokens, m.begin, m.end, report);
      mentions.push_back(m);
      i = end;
    }
  }
  return mentions;
}

}  // namespace constat
