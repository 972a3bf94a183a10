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

#ifndef CONSTAT_COREF_H_
#define CONSTAT_COREF_H_

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "constat/events.h"
#include "constat/knowledge.h"
#include "constat/mentions.h"

// Reference resolution as a minimal set partition of the mention list.
// Validity is pairwise compatibility within blocks plus event-argument
// disjointness; among valid partitions with the fewest blocks the canonical
// one minimizes, position by position, each mention's distance to the
// nearest preceding member of its block.

namespace constat {

// Raised when the mention list exceeds the resolver's search cap.
class CorefCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maximum mention count accepted by Resolve.
inline constexpr int kMaxMentions = 64;

// Block assignment in restricted-growth form: assignment[i] is the block of
// mention i; block ids appear in order of first use starting at 0.
struct CorefResult {
  std::vector<int> assignment;
  int block_count = 0;
};

// True when two mentions may share a unit block; a must be textually
// earlier. Writer-marked pairs always may; otherwise the concept axes must
// unify, labels and party markings must not clash, an indefinite never
// joins earlier material except across the person/vehicle axes, and a
// non-pronoun person mention stays out of the writer's party.
bool Compatible(const Mention& a, const Mention& b, const KnowledgeBase& kb);

// Unordered mention pairs kept apart by event structure: subject and object
// of the same predicate (part mentions exempt), and the surface subject
// versus the agent of a passive "surprised by" phrase. Writer-marked pairs
// are never constrained.
std::set<std::pair<int, int>> ForbiddenPairs(const std::vector<Mention>& mentions,
                                             const EventAnalysis& analysis,
                                             const Segmentation& seg,
                                             const KnowledgeBase& kb);

// Shared validity predicate: pairwise-compatible blocks, no forbidden pair
// inside a block, and all writer-marked mentions in one block.
bool ValidPartition(const std::vector<int>& assignment,
                    const std::vector<Mention>& mentions,
                    const KnowledgeBase& kb,
                    const std::set<std::pair<int, int>>& forbidden);

// Canonical order: fewer blocks first, then lexicographically smaller
// preceding-member distance sequence, then lexicographically smaller
// restricted-growth string.
bool PartitionLess(const std::vector<int>& a, const std::vector<int>& b);

// Production resolver: iterative-deepening depth-first search over block
// limits, visiting existing blocks nearest-first and a new block last, so
// the first valid leaf is the canonical partition. Throws CorefCapError
// beyond kMaxMentions.
CorefResult Resolve(const std::vector<Mention>& mentions,
                    const KnowledgeBase& kb,
                    const std::set<std::pair<int, int>>& forbidden);

// Exhaustive oracle over all set partitions; callers keep the mention count
// small (Bell numbers grow fast). Uses only ValidPartition and
// PartitionLess, so it is independent of the resolver's search order.
CorefResult BruteForce(const std::vector<Mention>& mentions,
                       const KnowledgeBase& kb,
                       const std::set<std::pair<int, int>>& forbidden);

// One resolved participant unit.
struct Entity {
  std::vector<int> mentions;     // textual order
  std::string person_concept;    // most specific on the axis, or empty
  std::string vehicle_concept;
  std::string label;
  bool is_writer_party = false;
  std::vector<std::string> facets;  // sorted unique facet names
  std::string unit_concept;         // vehicle axis, else person axis, else root
};

// Entities in order of first mention.
std::vector<Entity> BuildEntities(const std::vector<Mention>& mentions,
                                  const CorefResult& result,
                                  const KnowledgeBase& kb);

}  // namespace constat

#endif  // CONSTAT_COREF_H_
