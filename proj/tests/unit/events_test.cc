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

#include <string>
#include <vector>

#include "constat/events.h"
#include "constat/report.h"
#include "doctest.h"
#include "support/testdata.h"

namespace {

using constat::BuildEvents;
using constat::CoerceMentions;
using constat::EventAnalysis;
using constat::Facet;
using constat::Mention;
using constat::Report;
using constat::ResolveAgentAt;
using constat::Role;
using constat::Segment;
using constat::Segmentation;
using constat::Selectional;
using constat_test::Bundle;
using constat_test::MakeReport;

struct Built {
  Report report;
  Segmentation seg;
  std::vector<Mention> mentions;
  EventAnalysis analysis;
};

Built Build(const std::string& body, bool coerce = true) {
  Built out;
  out.report = MakeReport(body);
  out.seg = Segment(out.report, Bundle().morphology, Bundle().kb);
  out.mentions = constat::ExtractMentions(out.seg, out.report, Bundle().kb);
  out.analysis = BuildEvents(out.seg, out.mentions, Bundle().kb);
  if (coerce) CoerceMentions(out.mentions, out.analysis, out.seg, Bundle().kb);
  return out;
}

TEST_CASE("subject precedes and object follows the predicate") {
  Built b = Build(
      "but I hit the second car which hadn't yet gone through the "
      "stop-sign.");
  REQUIRE(b.analysis.events.size() == 1);
  const constat::Event& event = b.analysis.events[0];
  CHECK(event.predicate == "hit");
  CHECK(event.subject_mention == 0);
  CHECK(event.object_mention == 1);
  CHECK(b.mentions[0].role == Role::kSubject);
  CHECK(b.mentions[1].role == Role::kObject);
  CHECK_FALSE(event.negated);
}

TEST_CASE("sentence-initial participial clauses have no agent") {
  Built b = Build(
      "Wanting to pass a hauler with its right blinker on, the latter "
      "turned left, forcing me to steer left to avoid it.");
  REQUIRE(b.analysis.clause_agent.size() == 3);
  CHECK(b.analysis.clause_agent[0] == -1);
  REQUIRE(!b.analysis.events.empty());
  CHECK(b.analysis.events[0].predicate == "pass");
  CHECK(b.analysis.events[0].subject_mention == -1);
  CHECK(b.analysis.events[0].object_mention == 0);
}

TEST_CASE("mentions after a participle never become agents") {
  Built b = Build("forcing me to steer left to avoid it.");
  REQUIRE(!b.analysis.events.empty());
  // "me" directly follows the participle, so it cannot be the subject.
  CHECK(b.analysis.events[0].subject_mention == -1);
}

TEST_CASE("coordinated clauses inherit the previous agent at their head") {
  Built b = Build(
      "when vehicle B hits my vehicle, and denies me the right-of-way from "
      "the right.");
  REQUIRE(b.analysis.events.size() == 1);
  CHECK(b.analysis.events[0].subject_mention == 0);
  // Anchored at the clause-initial position, the second clause inherits
  // vehicle B; anchored at the clause end, "me" is nearer.
  int denies_token = b.seg.clauses[1].begin_token + 1;
  CHECK(ResolveAgentAt(b.seg, b.mentions, b.analysis, 1, denies_token) == 0);
  CHECK(b.analysis.clause_agent[1] == 2);
}

TEST_CASE("verbless clauses still resolve a clause agent") {
  Built b = Build("The moment I started,");
  CHECK(b.analysis.events.empty());
  REQUIRE(b.analysis.clause_agent.size() == 1);
  CHECK(b.mentions[b.analysis.clause_agent[0]].surface == "I");
}

TEST_CASE("a vehicle subject of an agentive predicate means its driver") {
  Built b = Build(
      "Vehicle B coming from my left squeezed too close to me and damaged "
      "the whole left front side.");
  REQUIRE(b.mentions.size() >= 2);
  const Mention& vehicle_b = b.mentions[0];
  CHECK(vehicle_b.surface == "Vehicle B");
  CHECK(vehicle_b.facet == Facet::kDriver);
  REQUIRE(vehicle_b.coercion.has_value());
  CHECK(vehicle_b.coercion->kind == "agentive-subject");
  CHECK(vehicle_b.coercion->trigger == Selectional::kRequiresAgent);
  CHECK(vehicle_b.coercion->predicate == "squeeze");
}

TEST_CASE("a first person object of a physical predicate means the car") {
  Built b = Build("Vehicle B damaged me.");
  REQUIRE(b.mentions.size() == 2);
  const Mention& me = b.mentions[1];
  CHECK(me.facet == Facet::kVehicle);
  REQUIRE(me.coercion.has_value());
  CHECK(me.coercion->kind == "affected-object");
  CHECK(me.coercion->trigger == Selectional::kRequiresPhysicalObject);
  CHECK(me.coercion->predicate == "damage");
}

TEST_CASE("a vehicle opening its own door means the passenger group") {
  Built b = Build("Vehicle B opened its door.");
  REQUIRE(b.mentions.size() == 2);
  const Mention& vehicle_b = b.mentions[0];
  CHECK(vehicle_b.facet == Facet::kPassengerGroup);
  REQUIRE(vehicle_b.coercion.has_value());
  CHECK(vehicle_b.coercion->kind == "door-opening");
  CHECK(vehicle_b.coercion->trigger == Selectional::kRequiresAgent);
}

TEST_CASE("coercion triggers equal the predicate's lexicon selectional") {
  for (const char* id : {"T2", "T3", "T4", "T5", "T7", "T8", "T10", "T11",
                         "T12", "T14", "T15"}) {
    constat::Report report = constat::LoadReport(
        constat_test::CorpusDir() + "/" + std::string(id) + ".en.txt");
    Segmentation seg = Segment(report, Bundle().morphology, Bundle().kb);
    auto mentions = constat::ExtractMentions(seg, report, Bundle().kb);
    EventAnalysis analysis = BuildEvents(seg, mentions, Bundle().kb);
    CoerceMentions(mentions, analysis, seg, Bundle().kb);
    for (const Mention& m : mentions) {
      if (!m.coercion) continue;
      bool found = false;
      for (const constat::LexiconEntry& entry : Bundle().kb.entries()) {
        if (entry.lemma == m.coercion->predicate &&
            entry.selectional == m.coercion->trigger) {
          found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("no coercion without a selectional constraint") {
  Built b = Build("The driver heard the car.");
  REQUIRE(!b.analysis.events.empty());
  CHECK(b.analysis.events[0].predicate == "hear");
  for (const Mention& m : b.mentions) CHECK_FALSE(m.coercion.has_value());
}

}  // namespace
