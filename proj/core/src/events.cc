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

#include "constat/events.h"

namespace constat {
namespace {

int FirstNonPunct(const std::vector<Token>& tokens, const Clause& clause) {
  for (int i = clause.begin_token; i < clause.end_token; ++i)
    if (!tokens[i].is_punct) return i;
  return -1;
}

// Nearest mention of the clause strictly before the anchor token, skipping
// participial attachments.
int SameClauseAgent(const std::vector<Mention>& mentions, int clause_index,
                    int anchor) {
  int best = -1;
  for (size_t i = 0; i < mentions.size(); ++i) {
    const Mention& m = mentions[i];
    if (m.clause != clause_index || m.head >= anchor || m.after_ing) continue;
    best = static_cast<int>(i);
  }
  return best;
}

int PrecedingAgent(const std::vector<Mention>& mentions, int limit_token) {
  int best = -1;
  for (size_t i = 0; i < mentions.size(); ++i) {
    const Mention& m = mentions[i];
    if (m.head >= limit_token || m.after_ing) continue;
    best = static_cast<int>(i);
  }
  return best;
}

int ComputeAgent(const Segmentation& seg, const std::vector<Mention>& mentions,
                 const std::vector<int>& clause_agent, int clause_index,
                 int anchor) {
  int same = SameClauseAgent(mentions, clause_index, anchor);
  if (same >= 0) return same;

  const Clause& clause = seg.clauses[clause_index];
  int first = FirstNonPunct(seg.tokens, clause);
  if (first < 0) return -1;
  // A participial clause opening its sentence has no agent to inherit.
  if (clause.clause_index == 0 && IsBareIng(seg.tokens, first)) return -1;
  const std::string& lemma = seg.tokens[first].lemma;
  if ((lemma == "and" || lemma == "but") && clause_index > 0 &&
      clause_index <= static_cast<int>(clause_agent.size()))
    return clause_agent[clause_index - 1];
  return PrecedingAgent(mentions, clause.begin_token);
}

}  // namespace

EventAnalysis BuildEvents(const Segmentation& seg,
                          std::vector<Mention>& mentions,
                          const KnowledgeBase& kb) {
  EventAnalysis analysis;
  const int num_clauses = static_cast<int>(seg.clauses.size());
  analysis.clause_predicates.reserve(num_clauses);
  for (const Clause& clause : seg.clauses)
    analysis.clause_predicates.push_back(FindPredicate(seg.tokens, clause, kb));

  for (int c = 0; c < num_clauses; ++c) {
    const Clause& clause = seg.clauses[c];
    const auto& pred = analysis.clause_predicates[c];
    int anchor = pred ? pred->token : clause.end_token;
    int agent = ComputeAgent(seg, mentions, analysis.clause_agent, c, anchor);
    analysis.clause_agent.push_back(agent);

    if (!pred) {
      analysis.clause_event.push_back(-1);
      continue;
    }

    Event event;
    event.clause = c;
    event.predicate_token = pred->token;
    event.predicate = pred->entry->lemma;
    event.predicate_class = pred->entry->word_class;
    event.selectional = pred->entry->selectional;
    event.negated = pred->negated;
    event.ability = pred->ability;
    event.aspect = pred->aspect;
    event.intention_token = pred->intention_token;
    event.subject_mention = agent;

    int object = -1;
    for (size_t i = 0; i < mentions.size(); ++i) {
      const Mention& m = mentions[i];
      if (m.clause != c || m.begin <= pred->token) continue;
      if (object < 0 || m.begin < mentions[object].begin)
        object = static_cast<int>(i);
    }
    event.object_mention = object;

    if (agent >= 0 && mentions[agent].clause == c &&
        mentions[agent].role == Role::kUnknown)
      mentions[agent].role = Role::kSubject;
    if (object >= 0 && mentions[object].role == Role::kUnknown)
      mentions[object].role = Role::kObject;
    for (Mention& m : mentions) {
      if (m.clause == c && m.begin > pred->token && m.role == Role::kUnknown)
        m.role = Role::kOblique;
    }

    analysis.clause_event.push_back(static_cast<int>(analysis.events.size()));
    analysis.events.push_back(event);
  }
  return analysis;
}

int ResolveAgentAt(const Segmentation& seg,
                   const std::vector<Mention>& mentions,
                   const EventAnalysis& analysis, int clause_index,
                   int anchor_token) {
  return ComputeAgent(seg, mentions, analysis.clause_agent, clause_index,
                      anchor_token);
}

void CoerceMentions(std::vector<Mention>& mentions,
                    const EventAnalysis& analysis, const Segmentation& seg,
                    const KnowledgeBase& kb) {
  (void)seg;
  (void)kb;
  for (const Event& event : analysis.events) {
    Mention* subject = event.subject_mention >= 0
                           ? &mentions[event.subject_mention]
                           : nullptr;
    Mention* object =
        event.object_mention >= 0 ? &mentions[event.object_mention] : nullptr;

    bool door_opening = event.predicate == "open" &&
                        event.selectional == Selectional::kRequiresAgent &&
                        object != nullptr && object->part_concept == "door" &&
                        subject != nullptr && subject->facet == Facet::kVehicle;
    if (door_opening) {
      // Opening a door points at someone inside, not necessarily the driver.
      subject->facet = Facet::kPassengerGroup;
      subject->coercion = CoercionRecord{"door-opening", event.selectional,
                                         event.predicate};
    } else if (subject != nullptr && subject->facet == Facet::kVehicle &&
               event.selectional == Selectional::kRequiresAgent &&
               !subject->coercion) {
      subject->facet = Facet::kDriver;
      subject->coercion = CoercionRecord{"agentive-subject", event.selectional,
                                         event.predicate};
    }

    if (event.selectional != Selectional::kRequiresAgent &&
        event.selectional != Selectional::kRequiresPhysicalObject)
      continue;
    for (Mention& m : mentions) {
      if (m.clause != event.clause || !m.pronoun || !m.first_person) continue;
      if (m.role != Role::kObject && m.role != Role::kOblique) continue;
      if (m.coercion) continue;
      m.facet = Facet::kVehicle;
      m.coercion =
          CoercionRecord{"affected-object", event.selectional, event.predicate};
    }
  }
}

}  // namespace constat
