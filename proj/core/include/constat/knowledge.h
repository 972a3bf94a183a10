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

#ifndef CONSTAT_KNOWLEDGE_H_
#define CONSTAT_KNOWLEDGE_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Static background knowledge for claim-report analysis: a typed concept
// hierarchy with part-of links, a registry of traffic rules, and a word-class
// lexicon. All three are loaded from line-oriented TSV files and immutable
// afterwards.

namespace constat {

// Word classes recognized by the analyzer. Every lexicon entry carries
// exactly one class; a lemma may appear under several classes.
enum class WordClass {
  kCollisionVerb,
  kMotionVerb,
  kStopVerb,
  kAvoidanceVerb,
  kIntentionVerb,
  kSignalVerb,
  kPerceptionVerb,
  kAbilityModal,
  kNegationMarker,
  kSpeedIntensifier,
  kSurpriseLexeme,
  kSuddennessAdverb,
  kBlameLexeme,
  kPassiveMarker,
  kReflexiveMotionVerb,
  kImpactNoun,
  kVehicleNoun,
  kPersonNoun,
  kPartNoun,
  kDeterminer,
  kPronoun,
};

// Selectional constraint a predicate places on its arguments. Drives the
// metonymic facet coercions in the mentions module.
enum class Selectional {
  kNone,  // entry carries no constraint
  kRequiresAgent,
  kRequiresPhysicalObject,
  kNeutral,
};

const char* WordClassName(WordClass word_class);
std::optional<WordClass> WordClassFromName(std::string_view name);
const char* SelectionalName(Selectional selectional);

// True for classes whose lexemes can head a clause predicate.
bool IsVerbClass(WordClass word_class);

struct LexiconEntry {
  std::string lemma;  // lowercase; multi-word lemmas are space-joined
  WordClass word_class;
  std::string concept_name;  // set for noun classes, must exist in the hierarchy
  Selectional selectional = Selectional::kNone;
};

struct TrafficRule {
  std::string id;
  std::string description;
  // Identifiers of event patterns whose presence signals a violation.
  // Populated from the built-in pattern table, not from the rules file.
  std::vector<std::string> violation_patterns;
};

// Errors raised by loading and lookups. ParseError carries the file and
// 1-based line number of the offending line.
class KnowledgeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public KnowledgeError {
 public:
  ParseError(const std::string& file, int line, const std::string& message);
  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

class CycleError : public KnowledgeError {
 public:
  using KnowledgeError::KnowledgeError;
};

class UnknownConceptError : public KnowledgeError {
 public:
  using KnowledgeError::KnowledgeError;
};

// Concept hierarchy. Subtype edges form a DAG rooted at the single concept
// "entity"; the reflexive-transitive closure is precomputed at load time.
// Part-of links relate part concepts to the whole they belong to.
class TypeHierarchy {
 public:
  // True iff a is b or a transitive subtype of b.
  // Throws UnknownConceptError if either concept is absent.
  bool IsSubtype(std::string_view a, std::string_view b) const;

  bool HasConcept(std::string_view concept_name) const;

  // Whole concept for a part concept, or nullptr when the concept carries
  // no part-of link.
  const std::string* WholeOf(std::string_view part) const;

  // Depth of the longest subtype chain from the concept up to the root.
  int Depth(std::string_view concept_name) const;

  const std::vector<std::string>& concepts() const { return names_; }
  const std::string& root() const { return root_; }

 private:
  friend class KnowledgeBase;

  int Index(std::string_view concept_name) const;  // -1 when absent
  int RequireIndex(std::string_view concept_name) const;

  std::vector<std::string> names_;  // insertion order
  std::map<std::string, int, std::less<>> index_;
  std::vector<std::vector<bool>> closure_;  // closure_[a][b]: a subtype of b
  std::vector<int> depth_;
  std::map<std::string, std::string, std::less<>> part_whole_;
  std::string root_;
};

// Immutable bundle of hierarchy, rules and lexicon.
//
// File formats (UTF-8, line-oriented, '#' starts a comment, fields are
// tab-separated):
//   hierarchy: child <TAB> isa <TAB> parent
//              part <TAB> partof <TAB> whole
//   rules:     rule-id <TAB> description
//   lexicon:   lang <TAB> lemma <TAB> word_class [<TAB> concept [<TAB> selectional]]
// Empty concept/selectional fields may be written as "-".
class KnowledgeBase {
 public:
  // Loads and validates the three files. Throws ParseError on malformed
  // lines, CycleError on a cyclic subtype relation, UnknownConceptError when
  // a noun entry or part-of link names an absent concept.
  static KnowledgeBase Load(const std::string& hierarchy_path,
                            const std::string& rules_path,
                            const std::string& lexicon_path);

  const TypeHierarchy& hierarchy() const { return hierarchy_; }

  bool IsSubtype(std::string_view a, std::string_view b) const {
    return hierarchy_.IsSubtype(a, b);
  }

  // All entries whose lemma equals the query after lowercase folding.
  // Unknown lemmas yield an empty list.
  std::vector<LexiconEntry> Lookup(std::string_view lemma) const;

  // First entry of the given class for the lemma, or nullptr.
  const LexiconEntry* Find(std::string_view lemma, WordClass word_class) const;

  bool HasClass(std::string_view lemma, WordClass word_class) const {
    return Find(lemma, word_class) != nullptr;
  }

  const TrafficRule* FindRule(std::string_view id) const;
  const std::vector<TrafficRule>& rules() const { return rules_; }

  // Multi-word lemmas of the given class, as token vectors, longest first.
  const std::vector<std::vector<std::string>>& MultiwordLemmas(
      WordClass word_class) const;

  const std::vector<LexiconEntry>& entries() const { return entries_; }

 private:
  TypeHierarchy hierarchy_;
  std::vector<TrafficRule> rules_;
  std::vector<LexiconEntry> entries_;
  std::map<std::string, std::vector<int>, std::less<>> by_lemma_;
  std::map<WordClass, std::vector<std::vector<std::string>>> multiword_;
};

// Lowercase folding used for all lemma lookups (ASCII plus Latin-1 letters).
std::string FoldCase(std::string_view text);

// Content lines of a line-oriented TSV data file with their 1-based line
// numbers; '#' comments and blank lines are dropped. Throws KnowledgeError
// when the file cannot be opened.
std::vector<std::pair<int, std::string>> ReadDataLines(const std::string& path);

std::vector<std::string> SplitTabFields(const std::string& line);

}  // namespace constat

#endif  // CONSTAT_KNOWLEDGE_H_
