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

#ifndef CONSTAT_TESTS_SUPPORT_SYNTHETIC_H_
#define CONSTAT_TESTS_SUPPORT_SYNTHETIC_H_

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "constat/mentions.h"

// Randomized mention lists for resolver-versus-oracle checks. The generator
// preserves the invariants extraction guarantees: first-person mentions are
// writer-marked pronouns, and no forbidden pair joins two writer-marked
// mentions.

namespace constat_test {

struct SyntheticCase {
  std::vector<constat::Mention> mentions;
  std::set<std::pair<int, int>> forbidden;
};

inline SyntheticCase MakeSyntheticCase(std::mt19937& rng, int max_mentions) {
  static const char* kPersonAxis[] = {"", "", "person", "driver", "witness"};
  static const char* kVehicleAxis[] = {"", "", "vehicle", "car", "truck",
                                       "hauler"};
  static const char* kLabels[] = {"", "", "", "A", "B"};

  SyntheticCase out;
  std::uniform_int_distribution<int> size_dist(1, max_mentions);
  int n = size_dist(rng);
  std::uniform_int_distribution<int> pct(0, 99);
  for (int i = 0; i < n; ++i) {
    constat::Mention m;
    m.begin = 3 * i;
    m.end = 3 * i + 1;
    m.head = 3 * i;
    m.clause = i / 2;
    m.surface = "m" + std::to_string(i);
    int party = pct(rng);
    if (party < 20) {
      m.party = constat::PartyMark::kWriter;
      m.pronoun = true;
      m.first_person = true;
    } else {
      if (party < 40) m.party = constat::PartyMark::kOther;
      m.pronoun = pct(rng) < 20;
      m.person_concept = kPersonAxis[pct(rng) % 5];
      m.vehicle_concept = kVehicleAxis[pct(rng) % 6];
      if (m.person_concept.empty() && !m.vehicle_concept.empty() &&
          pct(rng) < 15) {
        m.part_concept = "door";
      }
      if (!m.pronoun) m.label = kLabels[pct(rng) % 5];
      m.indefinite = !m.pronoun && pct(rng) < 30;
    }
    out.mentions.push_back(m);
  }
  int pair_budget = n > 1 ? pct(rng) % n : 0;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < pair_budget; ++k) {
    int a = pick(rng);
    int b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (out.mentions[a].party == constat::PartyMark::kWriter &&
        out.mentions[b].party == constat::PartyMark::kWriter) {
      continue;
    }
    out.forbidden.insert({a, b});
  }
  return out;
}

}  // namespace constat_test

#endif  // CONSTAT_TESTS_SUPPORT_SYNTHETIC_H_
