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

#include "constat/coref.h"

#include <algorithm>
#include <functional>

#include "constat/predicate.h"

namespace constat {
namespace {

bool PersonOnly(const Mention& m) {
  return !m.person_concept.empty() && m.vehicle_concept.empty();
}

bool AxesUnify(const std::string& a, const std::string& b,
               const KnowledgeBase& kb) {
  if (a.empty() || b.empty()) return true;
  return kb.IsSubtype(a, b) || kb.IsSubtype(b, a);
}

int NextNonPunct(const std::vector<Token>& tokens, int i, int limit) {
  for (int j = i + 1; j < limit; ++j)
    if (!tokens[j].is_punct) return j;
  return -1;
}

std::vector<int> KSequence(const std::vector<int>& assignment) {
  const int n = static_cast<int>(assignment.size());
  const int kInf = n + 1;
  std::vector<int> ks(n, kInf);
  for (int i = 0; i < n; ++i) {
    for (int j = i - 1; j >= 0; --j) {
      if (assignment[j] == assignment[i]) {
        ks[i] = i - j;
        break;
      }
    }
  }
  return ks;
}

int BlockCount(const std::vector<int>& assignment) {
  int count = 0;
  for (int block : assignment) count = std::max(count, block + 1);
  return count;
}

}  // namespace

bool Compatible(const Mention& a, const Mention& b, const KnowledgeBase& kb) {
  // The writer's own mentions always share the writer's unit.
  if (a.party == PartyMark::kWriter && b.party == PartyMark::kWriter)
    return true;
  if ((a.party == PartyMark::kWriter && b.party == PartyMark::kOther) ||
      (a.party == PartyMark::kOther && b.party == PartyMark::kWriter))
    return false;
  if (!a.label.empty() && !b.label.empty() && a.label != b.label) return false;
  if (!AxesUnify(a.person_concept, b.person_concept, kb)) return false;
  if (!AxesUnify(a.vehicle_concept, b.vehicle_concept, kb)) return false;

  // An indefinite introduces a new referent; it only reaches back across
  // the person/vehicle axis split (a driver joining a known vehicle) or to
  // a pronoun.
  if (b.indefinite) {
    bool cross_axis = (PersonOnly(b) && !a.vehicle_concept.empty()) ||
                      (PersonOnly(a) && !b.vehicle_concept.empty());
    if (!a.pronoun && !cross_axis) return false;
  }
  if ((a.party == PartyMark::kWriter && b.indefinite) ||
      (a.indefinite && b.party == PartyMark::kWriter))
    return false;

  // A full person noun phrase never names the writer's party unless it is
  // itself writer-marked ("my husband").
  if (!a.pronoun && !a.person_concept.empty() &&
      a.party != PartyMark::kWriter && b.party == PartyMark::kWriter)
    return false;
  if (!b.pronoun && !b.person_concept.empty() &&
      b.party != PartyMark::kWriter && a.party == PartyMark::kWriter)
    return false;
  return true;
}

std::set<std::pair<int, int>> ForbiddenPairs(
    const std::vector<Mention>& mentions, const EventAnalysis& analysis,
    const Segmentation& seg, const KnowledgeBase& kb) {
  std::set<std::pair<int, int>> forbidden;
  auto add = [&](int x, int y) {
    if (x < 0 || y < 0 || x == y) return;
    if (mentions[x].party == PartyMark::kWriter &&
        mentions[y].party == PartyMark::kWriter)
      return;
    forbidden.insert({std::min(x, y), std::max(x, y)});
  };

  // Subject and object of one predicate are distinct referents, except when
  // a part stands in for its whole or both sides are the writer's.
  for (const Event& event : analysis.events) {
    int s = event.subject_mention;
    int o = event.object_mention;
    if (s < 0 || o < 0) continue;
    if (!mentions[s].part_concept.empty() || !mentions[o].part_concept.empty())
      continue;
    add(s, o);
  }

  // "X was surprised by Y": X and Y are distinct parties.
  for (size_t c = 0; c < seg.clauses.size(); ++c) {
    const Clause& clause = seg.clauses[c];
    for (const TokenMatch& match :
         FindClassMatches(seg.tokens, clause.begin_token, clause.end_token, kb,
                          WordClass::kSurpriseLexeme)) {
      bool be_before = false;
      for (int i = clause.begin_token; i < match.begin; ++i)
        if (seg.tokens[i].lemma == "be") be_before = true;
      if (!be_before) continue;
      int by = NextNonPunct(seg.tokens, match.end - 1, clause.end_token);
      if (by < 0 || seg.tokens[by].lemma != "by") continue;
      int x = -1;
      int y = -1;
      for (size_t i = 0; i < mentions.size(); ++i) {
        if (mentions[i].head < match.begin) x = static_cast<int>(i);
        if (mentions[i].head > by && y < 0) y = static_cast<int>(i);
      }
      add(x, y);
    }
  }
  return forbidden;
}

bool ValidPartition(const std::vector<int>& assignment,
                    const std::vector<Mention>& mentions,
                    const KnowledgeBase& kb,
                    const std::set<std::pair<int, int>>& forbidden) {
  const int n = static_cast<int>(assignment.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (assignment[i] != assignment[j]) continue;
      if (!Compatible(mentions[i], mentions[j], kb)) return false;
      if (forbidden.count({i, j}) > 0) return false;
    }
  }
  int writer_block = -1;
  for (int i = 0; i < n; ++i) {
    if (mentions[i].party != PartyMark::kWriter) continue;
    if (writer_block < 0)
      writer_block = assignment[i];
    else if (assignment[i] != writer_block)
      return false;
  }
  return true;
}

bool PartitionLess(const std::vector<int>& a, const std::vector<int>& b) {
  int blocks_a = BlockCount(a);
  int blocks_b = BlockCount(b);
  if (blocks_a != blocks_b) return blocks_a < blocks_b;
  std::vector<int> ka = KSequence(a);
  std::vector<int> kb_seq = KSequence(b);
  if (ka != kb_seq) return ka < kb_seq;
  return a < b;
}

CorefResult Resolve(const std::vector<Mention>& mentions,
                    const KnowledgeBase& kb,
                    const std::set<std::pair<int, int>>& forbidden) {
  const int n = static_cast<int>(mentions.size());
  if (n > kMaxMentions)
    throw CorefCapError("mention count " + std::to_string(n) +
                        " exceeds resolver cap of " +
                        std::to_string(kMaxMentions));
  CorefResult result;
  if (n == 0) return result;

  // Pairwise admissibility of placing j and i (j < i) in one block.
  std::vector<std::vector<bool>> joinable(n, std::vector<bool>(n, false));
  for (int j = 0; j < n; ++j) {
    for (int i = j + 1; i < n; ++i) {
      joinable[j][i] = Compatible(mentions[j], mentions[i], kb) &&
                       forbidden.count({j, i}) == 0;
    }
  }

  std::vector<int> assignment(n, -1);
  std::vector<std::vector<int>> blocks;
  int writer_block = -1;

  std::function<bool(int, int)> dfs = [&](int i, int limit) -> bool {
    if (i == n) return true;
    const bool is_writer = mentions[i].party == PartyMark::kWriter;

    // Existing blocks nearest-first, then a fresh block: the visit order
    // realizes the canonical distance-sequence minimum.
    std::vector<int> order(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) order[b] = static_cast<int>(b);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return blocks[x].back() > blocks[y].back();
    });

    for (int b : order) {
      if (is_writer && writer_block >= 0 && b != writer_block) continue;
      bool ok = true;
      for (int j : blocks[b]) {
        if (!joinable[j][i]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assignment[i] = b;
      blocks[b].push_back(i);
      int saved_writer = writer_block;
      if (is_writer && writer_block < 0) writer_block = b;
      if (dfs(i + 1, limit)) return true;
      writer_block = saved_writer;
      blocks[b].pop_back();
      assignment[i] = -1;
    }

    if (static_cast<int>(blocks.size()) < limit &&
        !(is_writer && writer_block >= 0)) {
      int b = static_cast<int>(blocks.size());
      assignment[i] = b;
      blocks.push_back({i});
      int saved_writer = writer_block;
      if (is_writer) writer_block = b;
      if (dfs(i + 1, limit)) return true;
      writer_block = saved_writer;
      blocks.pop_back();
      assignment[i] = -1;
    }
    return false;
  };

  for (int limit = 1; limit <= n; ++limit) {
    blocks.clear();
    writer_block = -1;
    std::fill(assignment.begin(), assignment.end(), -1);
    if (dfs(0, limit)) {
      result.assignment = assignment;
      result.block_count = static_cast<int>(blocks.size());
      return result;
    }
  }
  throw CorefCapError("no valid partition found");
}

CorefResult BruteForce(const std::vector<Mention>& mentions,
                       const KnowledgeBase& kb,
                       const std::set<std::pair<int, int>>& forbidden) {
  const int n = static_cast<int>(mentions.size());
  CorefResult result;
  if (n == 0) return result;

  std::vector<int> a(n, 0);
  std::vector<int> best;
  bool have_best = false;
  while (true) {
    if (ValidPartition(a, mentions, kb, forbidden) &&
        (!have_best || PartitionLess(a, best))) {
      best = a;
      have_best = true;
    }
    int i = n - 1;
    for (; i >= 1; --i) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, a[j]);
      if (a[i] <= prefix_max) {
        ++a[i];
        for (int j = i + 1; j < n; ++j) a[j] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  result.assignment = best;
  result.block_count = BlockCount(best);
  return result;
}

std::vector<Entity> BuildEntities(const std::vector<Mention>& mentions,
                                  const CorefResult& result,
                                  const KnowledgeBase& kb) {
  std::vector<Entity> entities(result.block_count);
  for (size_t i = 0; i < mentions.size(); ++i)
    entities[result.assignment[i]].mentions.push_back(static_cast<int>(i));

  for (Entity& entity : entities) {
    std::set<std::string> facets;
    for (int mi : entity.mentions) {
      const Mention& m = mentions[mi];
      auto prefer = [&](std::string Entity::*field, const std::string& value) {
        if (value.empty()) return;
        std::string& current = entity.*field;
        if (current.empty() ||
            kb.hierarchy().Depth(value) > kb.hierarchy().Depth(current) ||
            (kb.hierarchy().Depth(value) == kb.hierarchy().Depth(current) &&
             value < current))
          current = value;
      };
      prefer(&Entity::person_concept, m.person_concept);
      prefer(&Entity::vehicle_concept, m.vehicle_concept);
      if (entity.label.empty() && !m.label.empty()) entity.label = m.label;
      if (m.party == PartyMark::kWriter) entity.is_writer_party = true;
      facets.insert(FacetName(m.facet));
    }
    entity.facets.assign(facets.begin(), facets.end());
    entity.unit_concept = !entity.vehicle_concept.empty()
                              ? entity.vehicle_concept
                              : (!entity.person_concept.empty()
                                     ? entity.person_concept
                                     : kb.hierarchy().root());
  }
  return entities;
}

}  // namespace constat
