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

#ifndef CONSTAT_EVENTS_H_
#define CONSTAT_EVENTS_H_

#include <optional>
#include <string>
#include <vector>

#include "constat/corpus.h"
#include "constat/knowledge.h"
#include "constat/mentions.h"
#include "constat/predicate.h"

// Clause-level events: at most one per clause, anchored at the clause
// predicate, with subject and object links into the mention list. A clause
// without a pre-predicate mention inherits its agent from the previous
// clause when it starts with a coordinating conjunction.

namespace constat {

struct Event {
  int clause = -1;
  int predicate_token = -1;
  std::string predicate;  // head lemma
  WordClass predicate_class = WordClass::kMotionVerb;
  Selectional selectional = Selectional::kNone;
  bool negated = false;
  bool ability = false;
  Aspect aspect = Aspect::kSimple;
  int intention_token = -1;
  int subject_mention = -1;  // -1 when unresolved
  int object_mention = -1;
};

struct EventAnalysis {
  // Indexed by clause: predicate, resolved agent mention, event index.
  std::vector<std::optional<PredicateInfo>> clause_predicates;
  std::vector<int> clause_agent;
  std::vector<int> clause_event;
  std::vector<Event> events;  // textual order
};

// Finds predicates, resolves clause agents and argument links, and assigns
// same-clause roles to mentions.
EventAnalysis BuildEvents(const Segmentation& seg,
                          std::vector<Mention>& mentions,
                          const KnowledgeBase& kb);

// Agent for an anchor token inside a clause: the nearest preceding mention
// of the clause, skipping mentions that directly follow a participial -ing
// form; otherwise the inherited or textually preceding agent. Returns a
// mention index or -1. Sentence-initial participial clauses never inherit.
int ResolveAgentAt(const Segmentation& seg,
                   const std::vector<Mention>& mentions,
                   const EventAnalysis& analysis, int clause_index,
                   int anchor_token);

// Facet coercions driven by predicate selectional constraints:
// a vehicle subject of an agent-requiring predicate refers to its driver; a
// first-person object of a constraint-bearing predicate refers to the
// writer's vehicle; a vehicle opening its own door refers to the passenger
// group. Each coercion records the selectional constraint that fired.
void CoerceMentions(std::vector<Mention>& mentions,
                    const EventAnalysis& analysis, const Segmentation& seg,
                    const KnowledgeBase& kb);

}  // namespace constat

#endif  // CONSTAT_EVENTS_H_
