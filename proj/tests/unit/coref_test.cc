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

#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "constat/coref.h"
#include "constat/report.h"
#include "doctest.h"
#include "support/synthetic.h"
#include "support/testdata.h"

namespace {

using constat::BruteForce;
using constat::BuildEntities;
using constat::Compatible;
using constat::CorefCapError;
using constat::CorefResult;
using constat::Entity;
using constat::EventAnalysis;
using constat::Facet;
using constat::ForbiddenPairs;
using constat::Mention;
using constat::PartitionLess;
using constat::PartyMark;
using constat::Report;
using constat::Resolve;
using constat::Segmentation;
using constat::ValidPartition;
using constat_test::Bundle;
using constat_test::CorpusDir;
using constat_test::MakeReport;
using constat_test::MakeSyntheticCase;

Mention M(int i) {
  Mention m;
  m.begin = 3 * i;
  m.end = 3 * i + 1;
  m.head = 3 * i;
  m.clause = i;
  m.surface = "m" + std::to_string(i);
  return m;
}

Mention Writer(int i) {
  Mention m = M(i);
  m.party = PartyMark::kWriter;
  m.pronoun = true;
  m.first_person = true;
  return m;
}

struct Resolved {
  std::vector<Mention> mentions;
  std::set<std::pair<int, int>> forbidden;
  CorefResult result;
  std::vector<Entity> entities;
};

Resolved ResolveText(const std::string& body) {
  Resolved out;
  Report report = MakeReport(body);
  Segmentation seg =
      constat::Segment(report, Bundle().morphology, Bundle().kb);
  out.mentions = constat::ExtractMentions(seg, report, Bundle().kb);
  EventAnalysis analysis =
      constat::BuildEvents(seg, out.mentions, Bundle().kb);
  constat::CoerceMentions(out.mentions, analysis, seg, Bundle().kb);
  out.forbidden = ForbiddenPairs(out.mentions, analysis, seg, Bundle().kb);
  out.result = Resolve(out.mentions, Bundle().kb, out.forbidden);
  out.entities = BuildEntities(out.mentions, out.result, Bundle().kb);
  return out;
}

TEST_CASE("writer-marked mentions are always mutually compatible") {
  CHECK(Compatible(Writer(0), Writer(1), Bundle().kb));
  Mention my_vehicle = M(1);
  my_vehicle.party = PartyMark::kWriter;
  my_vehicle.vehicle_concept = "vehicle";
  CHECK(Compatible(Writer(0), my_vehicle, Bundle().kb));
}

TEST_CASE("writer and other party never corefer") {
  Mention his_car = M(1);
  his_car.party = PartyMark::kOther;
  his_car.vehicle_concept = "car";
  CHECK_FALSE(Compatible(Writer(0), his_car, Bundle().kb));
  Mention mine = Writer(1);
  Mention theirs = M(0);
  theirs.party = PartyMark::kOther;
  CHECK_FALSE(Compatible(theirs, mine, Bundle().kb));
}

TEST_CASE("distinct labels never corefer") {
  Mention a = M(0);
  a.label = "A";
  a.vehicle_concept = "vehicle";
  Mention b = M(1);
  b.label = "B";
  b.vehicle_concept = "vehicle";
  CHECK_FALSE(Compatible(a, b, Bundle().kb));
  b.label = "A";
  CHECK(Compatible(a, b, Bundle().kb));
}

TEST_CASE("concept axes must unify in either direction") {
  Mention person = M(0);
  person.person_concept = "person";
  Mention driver = M(1);
  driver.person_concept = "driver";
  CHECK(Compatible(person, driver, Bundle().kb));
  Mention witness = M(1);
  witness.person_concept = "witness";
  Mention driver0 = M(0);
  driver0.person_concept = "driver";
  CHECK_FALSE(Compatible(driver0, witness, Bundle().kb));

  Mention vehicle = M(0);
  vehicle.vehicle_concept = "vehicle";
  Mention car = M(1);
  car.vehicle_concept = "car";
  CHECK(Compatible(vehicle, car, Bundle().kb));
  Mention truck = M(1);
  truck.vehicle_concept = "truck";
  Mention car0 = M(0);
  car0.vehicle_concept = "car";
  CHECK_FALSE(Compatible(car0, truck, Bundle().kb));
}

TEST_CASE("an indefinite may only open its entity") {
  Mention a_vehicle = M(0);
  a_vehicle.indefinite = true;
  a_vehicle.vehicle_concept = "vehicle";
  Mention the_car = M(1);
  the_car.vehicle_concept = "car";
  CHECK(Compatible(a_vehicle, the_car, Bundle().kb));

  Mention the_car_first = M(0);
  the_car_first.vehicle_concept = "car";
  Mention a_vehicle_later = M(1);
  a_vehicle_later.indefinite = true;
  a_vehicle_later.vehicle_concept = "vehicle";
  CHECK_FALSE(Compatible(the_car_first, a_vehicle_later, Bundle().kb));

  // A pronoun antecedent does not license the inference.
  Mention it = M(0);
  it.pronoun = true;
  CHECK(Compatible(it, a_vehicle_later, Bundle().kb));

  // Neither does a person-axis antecedent for a vehicle-axis indefinite.
  Mention the_driver = M(0);
  the_driver.person_concept = "driver";
  CHECK(Compatible(the_driver, a_vehicle_later, Bundle().kb));

  CHECK_FALSE(Compatible(Writer(0), a_vehicle_later, Bundle().kb));
}

TEST_CASE("definite person mentions stay out of the writer party") {
  Mention the_driver = M(1);
  the_driver.person_concept = "driver";
  CHECK_FALSE(Compatible(Writer(0), the_driver, Bundle().kb));
  CHECK_FALSE(Compatible(the_driver, Writer(2), Bundle().kb));
  // Vehicle-axis mentions may join: "my vehicle" and "the car" can be one
  // unit with "I".
  Mention the_car = M(1);
  the_car.vehicle_concept = "car";
  CHECK(Compatible(Writer(0), the_car, Bundle().kb));
}

TEST_CASE("subject and object of one predicate are kept apart") {
  Resolved r = ResolveText("but I hit the second car which hadn't yet gone "
                           "through the stop-sign.");
  CHECK(r.forbidden.count({0, 1}) == 1);
  CHECK(r.result.block_count == 2);
}

TEST_CASE("part objects are exempt from argument disjointness") {
  Resolved r = ResolveText("Vehicle B arrived and hit my left side mirror "
                           "with its right side mirror.");
  CHECK(r.forbidden.empty());
}

TEST_CASE("writer-marked argument pairs are never forbidden") {
  // "I" drives "my vehicle A": subject and object, but one party.
  Resolved r = ResolveText("I was driving in my vehicle A in the right "
                           "lane reserved for vehicles going straight "
                           "ahead.");
  REQUIRE(r.mentions.size() == 2);
  CHECK(r.mentions[0].party == PartyMark::kWriter);
  CHECK(r.mentions[1].party == PartyMark::kWriter);
  CHECK(r.forbidden.empty());
  CHECK(r.result.block_count == 1);
}

TEST_CASE("a passive surprised-by phrase separates patient and agent") {
  Resolved r =
      ResolveText("I was surprised by the person who braked in front of "
                  "me,");
  CHECK(r.forbidden.count({0, 1}) == 1);
  REQUIRE(r.result.block_count == 2);
  CHECK(r.entities[0].is_writer_party);
  CHECK(r.entities[1].person_concept == "person");
}

TEST_CASE("partition validity checks blocks pairs and the writer unit") {
  std::vector<Mention> ms = {Writer(0), M(1), Writer(2)};
  ms[1].person_concept = "driver";
  std::set<std::pair<int, int>> none;
  CHECK(ValidPartition({0, 1, 0}, ms, Bundle().kb, none));
  // Writer mentions split across blocks.
  CHECK_FALSE(ValidPartition({0, 1, 1}, ms, Bundle().kb, none));
  // Incompatible pair in one block.
  CHECK_FALSE(ValidPartition({0, 0, 0}, ms, Bundle().kb, none));
  // Forbidden pair in one block.
  std::vector<Mention> plain = {M(0), M(1)};
  std::set<std::pair<int, int>> forbidden = {{0, 1}};
  CHECK_FALSE(ValidPartition({0, 0}, plain, Bundle().kb, forbidden));
  CHECK(ValidPartition({0, 1}, plain, Bundle().kb, forbidden));
}

TEST_CASE("partition order prefers fewer blocks then nearer antecedents") {
  CHECK(PartitionLess({0, 0, 0}, {0, 0, 1}));
  CHECK_FALSE(PartitionLess({0, 0, 1}, {0, 0, 0}));
  // Same block count: linking m2 to its direct predecessor beats linking
  // m3 to m0.
  CHECK(PartitionLess({0, 1, 1, 0}, {0, 1, 0, 1}));
  CHECK_FALSE(PartitionLess({0, 1, 0, 1}, {0, 1, 1, 0}));
  CHECK_FALSE(PartitionLess({0, 1}, {0, 1}));
}

TEST_CASE("two vehicles and the writer resolve to two units") {
  Resolved r = ResolveText(
      "I was driving on the right hand side of the road when a vehicle "
      "arriving in front of me in the curve was completely thrown off "
      "course. Keeping as close as possible to the right, I wasn't able to "
      "avoid the car which was coming with great speed.");
  REQUIRE(r.result.block_count == 2);
  // The indefinite "a vehicle" and the definite "the car" are one unit.
  int vehicle_block = -1;
  int car_block = -1;
  for (size_t i = 0; i < r.mentions.size(); ++i) {
    if (r.mentions[i].surface == "a vehicle") {
      vehicle_block = r.result.assignment[i];
    }
    if (r.mentions[i].surface == "the car") {
      car_block = r.result.assignment[i];
    }
  }
  REQUIRE(vehicle_block >= 0);
  CHECK(vehicle_block == car_block);
  CHECK(r.entities[vehicle_block].vehicle_concept == "car");
}

TEST_CASE("labelled vehicles stay distinct units") {
  Resolved r = ResolveText(
      "Vehicle A waiting and stopped at the Pont de Levallois lights. "
      "Vehicle B arrived and hit my left side mirror with its right side "
      "mirror.");
  CHECK(r.result.block_count == 2);
}

TEST_CASE("an argument pair forces the definite vehicle to the writer") {
  Resolved r = ResolveText(
      "My husband had entered the intersection when Mr. X's car hit the "
      "front of the vehicle.");
  REQUIRE(r.result.block_count == 2);
  CHECK(r.result.assignment[0] == r.result.assignment[2]);
  CHECK(r.entities[r.result.assignment[0]].is_writer_party);
}

TEST_CASE("resolver matches the exhaustive oracle on the corpus") {
  for (const auto& entry :
       std::filesystem::directory_iterator(CorpusDir())) {
    if (entry.path().extension() != ".txt") continue;
    Report report = constat::LoadReport(entry.path().string());
    Segmentation seg =
        constat::Segment(report, Bundle().morphology, Bundle().kb);
    auto mentions = constat::ExtractMentions(seg, report, Bundle().kb);
    if (mentions.size() > 10) continue;
    EventAnalysis analysis =
        constat::BuildEvents(seg, mentions, Bundle().kb);
    constat::CoerceMentions(mentions, analysis, seg, Bundle().kb);
    auto forbidden = ForbiddenPairs(mentions, analysis, seg, Bundle().kb);
    CorefResult solver = Resolve(mentions, Bundle().kb, forbidden);
    CorefResult oracle = BruteForce(mentions, Bundle().kb, forbidden);
    CHECK(solver.assignment == oracle.assignment);
    CHECK(solver.block_count == oracle.block_count);
  }
}

TEST_CASE("resolver matches the exhaustive oracle on random mentions") {
  std::mt19937 rng(20260825);
  for (int iteration = 0; iteration < 300; ++iteration) {
    constat_test::SyntheticCase c = MakeSyntheticCase(rng, 7);
    CorefResult solver = Resolve(c.mentions, Bundle().kb, c.forbidden);
    CorefResult oracle = BruteForce(c.mentions, Bundle().kb, c.forbidden);
    CHECK(solver.assignment == oracle.assignment);
  }
}

TEST_CASE("a compatible definite mention never adds a unit") {
  for (const auto& entry :
       std::filesystem::directory_iterator(CorpusDir())) {
    if (entry.path().extension() != ".txt") continue;
    Report report = constat::LoadReport(entry.path().string());
    Segmentation seg =
        constat::Segment(report, Bundle().morphology, Bundle().kb);
    auto mentions = constat::ExtractMentions(seg, report, Bundle().kb);
    if (mentions.empty()) continue;
    EventAnalysis analysis =
        constat::BuildEvents(seg, mentions, Bundle().kb);
    constat::CoerceMentions(mentions, analysis, seg, Bundle().kb);
    auto forbidden = ForbiddenPairs(mentions, analysis, seg, Bundle().kb);
    int before = Resolve(mentions, Bundle().kb, forbidden).block_count;

    Mention extra = M(static_cast<int>(mentions.size()) + 1000);
    extra.clause = mentions.back().clause + 1;
    extra.begin = mentions.back().end + 1;
    extra.head = extra.begin;
    extra.end = extra.begin + 1;
    extra.surface = "the vehicle";
    extra.vehicle_concept = "vehicle";
    extra.facet = Facet::kVehicle;
    mentions.push_back(extra);
    int after = Resolve(mentions, Bundle().kb, forbidden).block_count;
    CHECK(after <= before);
  }
}

TEST_CASE("dropping a mention never increases the unit count") {
  std::mt19937 rng(7);
  for (int iteration = 0; iteration < 120; ++iteration) {
    constat_test::SyntheticCase c = MakeSyntheticCase(rng, 6);
    if (c.mentions.size() < 2) continue;
    int full = Resolve(c.mentions, Bundle().kb, c.forbidden).block_count;
    size_t drop = iteration % c.mentions.size();
    std::vector<Mention> fewer;
    for (size_t i = 0; i < c.mentions.size(); ++i) {
      if (i != drop) fewer.push_back(c.mentions[i]);
    }
    std::set<std::pair<int, int>> remapped;
    for (auto [a, b] : c.forbidden) {
      if (a == static_cast<int>(drop) || b == static_cast<int>(drop)) {
        continue;
      }
      int a2 = a - (a > static_cast<int>(drop) ? 1 : 0);
      int b2 = b - (b > static_cast<int>(drop) ? 1 : 0);
      remapped.insert({a2, b2});
    }
    int reduced = Resolve(fewer, Bundle().kb, remapped).block_count;
    CHECK(reduced <= full);
  }
}

TEST_CASE("the resolver rejects oversized mention lists") {
  std::vector<Mention> many;
  for (int i = 0; i < constat::kMaxMentions + 1; ++i) many.push_back(M(i));
  std::set<std::pair<int, int>> none;
  CHECK_THROWS_AS(Resolve(many, Bundle().kb, none), CorefCapError);
}

TEST_CASE("entities keep the most specific axis concepts") {
  std::vector<Mention> ms = {M(0), M(1), M(2)};
  ms[0].vehicle_concept = "vehicle";
  ms[0].facet = Facet::kVehicle;
  ms[1].vehicle_concept = "car";
  ms[1].label = "B";
  ms[1].facet = Facet::kVehicle;
  ms[2].person_concept = "driver";
  ms[2].facet = Facet::kDriver;
  CorefResult result;
  result.assignment = {0, 0, 1};
  result.block_count = 2;
  std::vector<Entity> entities = BuildEntities(ms, result, Bundle().kb);
  REQUIRE(entities.size() == 2);
  CHECK(entities[0].vehicle_concept == "car");
  CHECK(entities[0].label == "B");
  CHECK(entities[0].unit_concept == "car");
  CHECK(entities[0].facets == std::vector<std::string>{"vehicle"});
  CHECK_FALSE(entities[0].is_writer_party);
  CHECK(entities[1].unit_concept == "driver");

  // The root stands in when no axis is constrained.
  std::vector<Mention> bare = {Writer(0)};
  CorefResult single;
  single.assignment = {0};
  single.block_count = 1;
  std::vector<Entity> writer_only = BuildEntities(bare, single, Bundle().kb);
  REQUIRE(writer_only.size() == 1);
  CHECK(writer_only[0].unit_concept == "entity");
  CHECK(writer_only[0].is_writer_party);
}

TEST_CASE("resolution is deterministic across runs") {
  const std::string body =
      "Wanting to pass a hauler with its right blinker on, the latter "
      "turned left, forcing me to steer left to avoid it.";
  Resolved first = ResolveText(body);
  Resolved second = ResolveText(body);
  CHECK(first.result.assignment == second.result.assignment);
}

}  // namespace
