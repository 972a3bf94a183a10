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

#ifndef CONSTAT_MENTIONS_H_
#define CONSTAT_MENTIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "constat/corpus.h"
#include "constat/knowledge.h"

// Participant mentions: pronouns and noun phrases headed by vehicle, person
// or part nouns. Mentions carry two concept axes (person and vehicle) so a
// compound like "truck driver" can later unify with both the driver and the
// truck of one vehicle unit.

namespace constat {

// How a mention refers within the report: the writer's own party, some other
// party, or no marking either way.
enum class PartyMark { kUnmarked, kWriter, kOther };

// Referential facet of a mention after coercion.
enum class Facet { kUnknown, kDriver, kPassengerGroup, kVehicle, kPart, kPerson };

enum class Role { kUnknown, kSubject, kObject, kOblique };

const char* PartyMarkName(PartyMark mark);
const char* FacetName(Facet facet);
const char* RoleName(Role role);

// Records one facet coercion, with the selectional constraint of the
// predicate that triggered it.
struct CoercionRecord {
  std::string kind;       // agentive-subject | affected-object | part-reference | door-opening
  Selectional trigger = Selectional::kNone;
  std::string predicate;  // predicate lemma
};

struct Mention {
  int begin = 0;   // token span [begin, end)
  int end = 0;
  int head = 0;    // head token index
  int clause = -1;
  std::string surface;

  // Concept axes; empty when the axis is unconstrained.
  std::string person_concept;
  std::string vehicle_concept;
  std::string part_concept;  // set for part mentions; whole fills vehicle axis

  std::string label;  // "A", "B" or empty
  bool pronoun = false;
  bool first_person = false;
  bool plural_pronoun = false;  // we / us
  bool indefinite = false;
  PartyMark party = PartyMark::kUnmarked;
  bool after_ing = false;  // span starts right after a participial -ing token

  Facet facet = Facet::kUnknown;
  std::optional<CoercionRecord> coercion;
  Role role = Role::kUnknown;
};

// Extracts mentions in textual order. Plural noun phrases are treated as
// generic and skipped, except the partitive "one of the <noun>s" which
// yields one indefinite singular mention.
std::vector<Mention> ExtractMentions(const Segmentation& seg,
                                     const Report& report,
                                     const KnowledgeBase& kb);

}  // namespace constat

#endif  // CONSTAT_MENTIONS_H_
