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

#ifndef CONSTAT_ARGUMENTATION_H_
#define CONSTAT_ARGUMENTATION_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "constat/coref.h"
#include "constat/corpus.h"
#include "constat/events.h"
#include "constat/knowledge.h"
#include "constat/mentions.h"

// Argumentation layer: locating the impact, the writer's rhetorical devices
// (accusation of the other party or exculpation of their own), and ambiguous
// passages with their preferred readings.

namespace constat {

enum class ImpactStatus { kExplicit, kInferred };

const char* ImpactStatusName(ImpactStatus status);

// One piece of evidence for the impact. Kinds: collision-lexeme for an
// explicit impact; neg-ability-avoidance and neg-ability-stop for failed
// maneuvers that imply one; parameter-c-default when a crash report is
// assumed to report a crash.
struct ImpactClue {
  std::string kind;
  int clause = -1;  // -1 for the default assumption
  std::string text;
};

struct ImpactFinding {
  ImpactStatus status = ImpactStatus::kInferred;
  int event = -1;  // explicit impact event index, or -1
  std::vector<ImpactClue> clues;
  std::vector<int> participants;  // entity indices, writer's party first
};

ImpactFinding DetermineImpact(const Segmentation& seg, const Report& report,
                              const EventAnalysis& analysis,
                              const std::vector<Mention>& mentions,
                              const CorefResult& partition,
                              const std::vector<Entity>& entities,
                              const KnowledgeBase& kb);

// A rhetorical device. Accusation devices point at the other party
// (explicit-blame-lexeme, excessive-speed, implicit-rule-violation);
// exculpation devices shield the writer (surprise-lexeme, suddenness,
// unexpectedness-adverb, neg-ability-contrast, agent-suppression,
// correct-behavior-assertion).
struct Device {
  std::string kind;
  std::string strategy;  // "accusation" | "exculpation"
  int clause = -1;
  int span_begin = -1;  // token span [span_begin, span_end)
  int span_end = -1;
  std::string text;
  std::string rule;  // violated traffic rule id, or empty
  int entity = -1;   // attributed entity index, or -1
  bool self_exculpatory = false;
};

std::vector<Device> DetectDevices(const Segmentation& seg,
                                  const Report& report,
                                  const EventAnalysis& analysis,
                                  const std::vector<Mention>& mentions,
                                  const CorefResult& partition,
                                  const std::vector<Entity>& entities,
                                  const KnowledgeBase& kb);

// Lexically ambiguous lemmas per language, loaded from a TSV file with
// lines: lang <TAB> lemma <TAB> label <TAB> stance <TAB> explains.
struct AmbiguousSense {
  std::string label;
  std::string stance;  // "correct" | "neutral" | "at-fault-leaning"
  bool explains_impact = false;
};

class AmbiguityTable {
 public:
  static AmbiguityTable Load(const std::string& path);

  const std::vector<AmbiguousSense>* SensesOf(const std::string& language,
                                              const std::string& lemma) const;

 private:
  std::map<std::pair<std::string, std::string>, std::vector<AmbiguousSense>>
      senses_;
};

struct Reading {
  std::string label;
  std::string stance;
  bool explains_impact = false;
};

// An ambiguous passage in the writer's own account. Kinds:
// pluperfect-reference (what moment a pluperfect signaling event refers
// to), intention-vs-action (whether an intended maneuver was started), and
// lexical (senses from the ambiguity table).
struct AmbiguitySite {
  std::string kind;
  int clause = -1;
  int event = -1;         // anchoring event index, or -1 for lexical sites
  int anchor_token = -1;  // ordering anchor
  std::string text;
  std::vector<Reading> readings;
  int chosen = -1;
  std::string note;
};

// Sites in textual order, unresolved. Only passages attributed to the
// writer's party or to no resolved agent are ambiguous to the analyzer.
std::vector<AmbiguitySite> CollectSites(const Segmentation& seg,
                                        const Report& report,
                                        const EventAnalysis& analysis,
                                        const std::vector<Mention>& mentions,
                                        const CorefResult& partition,
                                        const std::vector<Entity>& entities,
                                        const AmbiguityTable& table,
                                        const KnowledgeBase& kb);

// Picks a reading per site in textual order. While no chosen reading
// explains the impact yet, a reading that explains it wins; otherwise
// stance decides: correct, then neutral, then the first reading.
void ResolveSites(std::vector<AmbiguitySite>& sites);

}  // namespace constat

#endif  // CONSTAT_ARGUMENTATION_H_
