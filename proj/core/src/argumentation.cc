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

#include "constat/argumentation.h"

#include <algorithm>
#include <array>

#include "constat/predicate.h"

namespace constat {
namespace {

int EntityOf(const CorefResult& partition, int mention) {
  if (mention < 0 || mention >= static_cast<int>(partition.assignment.size()))
    return -1;
  return partition.assignment[mention];
}

bool IsWriterEntity(const std::vector<Entity>& entities, int entity) {
  return entity >= 0 && entity < static_cast<int>(entities.size()) &&
         entities[entity].is_writer_party;
}

// Exact body bytes spanned by tokens [begin, end).
std::string SpanText(const Segmentation& seg, const Report& report, int begin,
                     int end) {
  if (begin < 0 || end <= begin) return "";
  size_t from = seg.tokens[begin].begin;
  size_t to = seg.tokens[end - 1].end;
  return report.body.substr(from, to - from);
}

// Nearest mention whose head lies before the token, anywhere in the report.
int NearestMentionBefore(const std::vector<Mention>& mentions, int token) {
  int best = -1;
  for (size_t i = 0; i < mentions.size(); ++i) {
    if (mentions[i].head >= token) continue;
    best = static_cast<int>(i);
  }
  return best;
}

// First run of consecutive non-punctuation tokens of the clause whose lemmas
// equal the pattern; returns the token span [first, last + 1), or {-1, -1}.
std::pair<int, int> FindLemmaSeq(const Segmentation& seg, const Clause& clause,
                                 const std::vector<std::string>& lemmas) {
  std::vector<int> words;
  for (int i = clause.begin_token; i < clause.end_token; ++i)
    if (!seg.tokens[i].is_punct) words.push_back(i);
  if (words.size() < lemmas.size()) return {-1, -1};
  for (size_t at = 0; at + lemmas.size() <= words.size(); ++at) {
    bool ok = true;
    for (size_t k = 0; k < lemmas.size(); ++k) {
      if (seg.tokens[words[at + k]].lemma != lemmas[k]) {
        ok = false;
        break;
      }
    }
    if (ok) return {words[at], words[at + lemmas.size() - 1] + 1};
  }
  return {-1, -1};
}

bool HasLemma(const Segmentation& seg, const Clause& clause,
              const std::string& lemma) {
  for (int i = clause.begin_token; i < clause.end_token; ++i)
    if (!seg.tokens[i].is_punct && seg.tokens[i].lemma == lemma) return true;
  return false;
}

Device MakeDevice(std::string kind, std::string strategy, int clause,
                  int span_begin, int span_end, const Segmentation& seg,
                  const Report& report) {
  Device device;
  device.kind = std::move(kind);
  device.strategy = std::move(strategy);
  device.clause = clause;
  device.span_begin = span_begin;
  device.span_end = span_end;
  device.text = SpanText(seg, report, span_begin, span_end);
  return device;
}

}  // namespace

const char* ImpactStatusName(ImpactStatus status) {
  return status == ImpactStatus::kExplicit ? "explicit" : "inferred";
}

ImpactFinding DetermineImpact(const Segmentation& seg, const Report& report,
                              const EventAnalysis& analysis,
                              const std::vector<Mention>& mentions,
                              const CorefResult& partition,
                              const std::vector<Entity>& entities,
                              const KnowledgeBase& kb) {
  (void)mentions;
  (void)partition;
  (void)kb;
  ImpactFinding finding;

  for (size_t i = 0; i < analysis.events.size(); ++i) {
    const Event& event = analysis.events[i];
    bool impact_lexeme = event.predicate_class == WordClass::kCollisionVerb ||
                         event.predicate_class == WordClass::kImpactNoun;
    if (!impact_lexeme || event.negated) continue;
    finding.status = ImpactStatus::kExplicit;
    finding.event = static_cast<int>(i);
    finding.clues.push_back(
        {"collision-lexeme", event.clause,
         ClauseText(seg, seg.clauses[event.clause], report)});
    break;
  }

  if (finding.status != ImpactStatus::kExplicit) {
    for (const Event& event : analysis.events) {
      if (!event.negated || !event.ability) continue;
      const char* kind = nullptr;
      if (event.predicate_class == WordClass::kAvoidanceVerb)
        kind = "neg-ability-avoidance";
      else if (event.predicate_class == WordClass::kStopVerb)
        kind = "neg-ability-stop";
      if (kind == nullptr) continue;
      finding.clues.push_back(
          {kind, event.clause,
           ClauseText(seg, seg.clauses[event.clause], report)});
    }
    // A crash report reports a crash even when no clause says so.
    if (finding.clues.empty())
      finding.clues.push_back({"parameter-c-default", -1, ""});
  }

  int writer = -1;
  for (size_t i = 0; i < entities.size(); ++i) {
    if (entities[i].is_writer_party) {
      writer = static_cast<int>(i);
      break;
    }
  }
  if (writer >= 0) {
    finding.participants.push_back(writer);
    auto pick = [&](bool need_axis) {
      int best = -1;
      for (size_t i = 0; i < entities.size(); ++i) {
        if (static_cast<int>(i) == writer) continue;
        const Entity& entity = entities[i];
        if (need_axis && entity.person_concept.empty() &&
            entity.vehicle_concept.empty())
          continue;
        if (best < 0 ||
            entity.mentions.size() > entities[best].mentions.size())
          best = static_cast<int>(i);
      }
      return best;
    };
    int other = pick(true);
    if (other < 0) other = pick(false);
    if (other >= 0) finding.participants.push_back(other);
  } else {
    for (size_t i = 0; i < entities.size() && i < 2; ++i)
      finding.participants.push_back(static_cast<int>(i));
  }
  return finding;
}

std::vector<Device> DetectDevices(const Segmentation& seg,
                                  const Report& report,
                                  const EventAnalysis& analysis,
                                  const std::vector<Mention>& mentions,
                                  const CorefResult& partition,
                                  const std::vector<Entity>& entities,
                                  const KnowledgeBase& kb) {
  std::vector<Device> out;
  const int num_clauses = static_cast<int>(seg.clauses.size());

  bool lane_marking_mentioned = false;
  for (const Token& token : seg.tokens) {
    if (token.is_punct) continue;
    if (token.lemma == "lane" || token.lemma == "marking" ||
        token.lemma == "arrow") {
      lane_marking_mentioned = true;
      break;
    }
  }

  for (int c = 0; c < num_clauses; ++c) {
    const Clause& clause = seg.clauses[c];

    // Blame lexemes accuse whoever the clause points at; an unattributed
    // blame still accuses the unnamed other party.
    for (const TokenMatch& match :
         FindClassMatches(seg.tokens, clause.begin_token, clause.end_token, kb,
                          WordClass::kBlameLexeme)) {
      int agent = ResolveAgentAt(seg, mentions, analysis, c, match.begin);
      int entity = EntityOf(partition, agent);
      if (IsWriterEntity(entities, entity)) continue;
      Device device = MakeDevice("explicit-blame-lexeme", "accusation", c,
                                 match.begin, match.end, seg, report);
      device.entity = entity;
      if (match.entry->lemma == "deny" &&
          FindLemmaSeq(seg, clause, {"right", "of", "way"}).first >= 0)
        device.rule = "priority-to-right";
      else if (match.entry->lemma == "blind")
        device.rule = "headlights-dipped";
      out.push_back(device);

      if (match.entry->lemma == "cut back" && lane_marking_mentioned) {
        Device violation = MakeDevice("implicit-rule-violation", "accusation",
                                      c, match.begin, match.end, seg, report);
        violation.entity = entity;
        violation.rule = "obey-lane-markings";
        out.push_back(violation);
      }
    }

    // A speed intensifier accuses only a resolved non-writer party: either
    // the head of a relative clause or the clause agent.
    for (const TokenMatch& match :
         FindClassMatches(seg.tokens, clause.begin_token, clause.end_token, kb,
                          WordClass::kSpeedIntensifier)) {
      int relative = -1;
      for (int i = clause.begin_token; i < match.begin; ++i) {
        if (seg.tokens[i].is_punct) continue;
        if (seg.tokens[i].lemma == "who" || seg.tokens[i].lemma == "which")
          relative = i;
      }
      int agent = relative >= 0 ? NearestMentionBefore(mentions, relative)
                                : analysis.clause_agent[c];
      int entity = EntityOf(partition, agent);
      if (entity < 0 || IsWriterEntity(entities, entity)) continue;
      Device device = MakeDevice("excessive-speed", "accusation", c,
                                 match.begin, match.end, seg, report);
      device.entity = entity;
      device.rule = "speed-limit";
      out.push_back(device);
    }

    // Surprise lexemes and suddenness adverbs shield the writer; a negated
    // suddenness adverb asserts unexpectedness instead.
    for (const TokenMatch& match :
         FindClassMatches(seg.tokens, clause.begin_token, clause.end_token, kb,
                          WordClass::kSurpriseLexeme)) {
      int scope = NearestMentionBefore(mentions, match.begin);
      int entity = EntityOf(partition, scope);
      if (entity >= 0 && !IsWriterEntity(entities, entity)) continue;
      Device device = MakeDevice("surprise-lexeme", "exculpation", c,
                                 match.begin, match.end, seg, report);
      device.entity = entity;
      device.self_exculpatory = true;
      out.push_back(device);
    }
    for (const TokenMatch& match :
         FindClassMatches(seg.tokens, clause.begin_token, clause.end_token, kb,
                          WordClass::kSuddennessAdverb)) {
      int negation = -1;
      int seen = 0;
      for (int i = match.begin - 1; i >= clause.begin_token && seen < 2; --i) {
        if (seg.tokens[i].is_punct) continue;
        ++seen;
        if (kb.Find(seg.tokens[i].lemma, WordClass::kNegationMarker)) {
          negation = i;
          break;
        }
      }
      if (negation >= 0) {
        Device device = MakeDevice("unexpectedness-adverb", "exculpation", c,
                                   negation, match.end, seg, report);
        device.self_exculpatory = true;
        out.push_back(device);
      } else {
        int scope = NearestMentionBefore(mentions, match.begin);
        int entity = EntityOf(partition, scope);
        if (entity >= 0 && !IsWriterEntity(entities, entity)) continue;
        Device device = MakeDevice("suddenness", "exculpation", c, match.begin,
                                   match.end, seg, report);
        device.entity = entity;
        device.self_exculpatory = true;
        out.push_back(device);
      }
    }

    // Passive phrasing suppresses the force that acted on the vehicle.
    for (const TokenMatch& match :
         FindClassMatches(seg.tokens, clause.begin_token, clause.end_token, kb,
                          WordClass::kPassiveMarker)) {
      int be_token = -1;
      for (int i = clause.begin_token; i < match.begin; ++i)
        if (!seg.tokens[i].is_punct && seg.tokens[i].lemma == "be") be_token = i;
      if (be_token < 0) continue;
      Device device = MakeDevice("agent-suppression", "exculpation", c,
                                 be_token, match.end, seg, report);
      device.self_exculpatory = true;
      out.push_back(device);
    }
  }

  for (const Event& event : analysis.events) {
    // A failed maneuver the writer could not perform.
    if (event.negated && event.ability &&
        (event.predicate_class == WordClass::kAvoidanceVerb ||
         event.predicate_class == WordClass::kStopVerb)) {
      const Clause& clause = seg.clauses[event.clause];
      Device device =
          MakeDevice("neg-ability-contrast", "exculpation", event.clause,
                     clause.begin_token, clause.end_token, seg, report);
      device.entity = EntityOf(partition, event.subject_mention);
      device.self_exculpatory = true;
      out.push_back(device);
    }

    // The writer's own vehicle as grammatical subject of a self-propelled
    // motion hides the writer behind the machine.
    if (event.predicate_class == WordClass::kReflexiveMotionVerb &&
        event.subject_mention >= 0 &&
        mentions[event.subject_mention].facet == Facet::kVehicle) {
      int entity = EntityOf(partition, event.subject_mention);
      if (!IsWriterEntity(entities, entity)) continue;
      Device device = MakeDevice(
          "agent-suppression", "exculpation", event.clause,
          mentions[event.subject_mention].begin, event.predicate_token + 1,
          seg, report);
      device.entity = entity;
      device.self_exculpatory = true;
      out.push_back(device);
    }
  }

  // Implicit violation of the passing rule: passing with "on the right"
  // said in the same clause.
  for (const Event& event : analysis.events) {
    if (event.predicate != "pass" || event.negated) continue;
    const Clause& clause = seg.clauses[event.clause];
    auto seq = FindLemmaSeq(seg, clause, {"on", "the", "right"});
    if (seq.first < 0) continue;
    int entity = EntityOf(partition, event.subject_mention);
    if (entity < 0 || IsWriterEntity(entities, entity)) continue;
    Device device = MakeDevice("implicit-rule-violation", "accusation",
                               event.clause, event.predicate_token, seq.second,
                               seg, report);
    device.entity = entity;
    device.rule = "pass-on-left";
    out.push_back(device);
  }

  // Correct-behavior assertions; at most one per clause.
  static const std::array<std::vector<std::string>, 4> kRightSidePatterns = {
      std::vector<std::string>{"on", "the", "right"},
      std::vector<std::string>{"to", "the", "right"},
      std::vector<std::string>{"the", "right", "lane"},
      std::vector<std::string>{"right", "hand", "side"}};
  for (int c = 0; c < num_clauses; ++c) {
    const Clause& clause = seg.clauses[c];
    int agent = analysis.clause_agent[c];
    int entity = EntityOf(partition, agent);
    bool writer_scope = entity < 0 || IsWriterEntity(entities, entity);

    Device device;
    bool fired = false;
    if (writer_scope) {
      std::pair<int, int> best{-1, -1};
      for (const auto& pattern : kRightSidePatterns) {
        auto seq = FindLemmaSeq(seg, clause, pattern);
        if (seq.first >= 0 && (best.first < 0 || seq.first < best.first))
          best = seq;
      }
      if (best.first < 0) best = FindLemmaSeq(seg, clause, {"moderate", "speed"});
      if (best.first >= 0) {
        device = MakeDevice("correct-behavior-assertion", "exculpation", c,
                            best.first, best.second, seg, report);
        device.entity = entity;
        fired = true;
      }
    }
    if (!fired && analysis.clause_event[c] >= 0) {
      const Event& event = analysis.events[analysis.clause_event[c]];
      int subject_entity = EntityOf(partition, event.subject_mention);
      bool signaling = event.predicate_class == WordClass::kSignalVerb &&
                       !event.negated &&
                       IsWriterEntity(entities, subject_entity);
      bool braking = HasLemma(seg, clause, "immediately") &&
                     HasLemma(seg, clause, "brake") &&
                     IsWriterEntity(entities, subject_entity);
      if (signaling || braking) {
        device = MakeDevice("correct-behavior-assertion", "exculpation", c,
                            clause.begin_token, clause.end_token, seg, report);
        device.entity = subject_entity;
        fired = true;
      }
    }
    if (fired) {
      device.self_exculpatory = true;
      out.push_back(device);
    }
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const Device& a, const Device& b) {
                     if (a.clause != b.clause) return a.clause < b.clause;
                     return a.span_begin < b.span_begin;
                   });
  return out;
}

AmbiguityTable AmbiguityTable::Load(const std::string& path) {
  AmbiguityTable table;
  for (const auto& [line_number, line] : ReadDataLines(path)) {
    auto fields = SplitTabFields(line);
    if (fields.size() != 5)
      throw ParseError(path, line_number, "expected 5 tab-separated fields");
    if (fields[4] != "true" && fields[4] != "false")
      throw ParseError(path, line_number, "explains must be true or false");
    AmbiguousSense sense;
    sense.label = fields[2];
    sense.stance = fields[3];
    sense.explains_impact = fields[4] == "true";
    table.senses_[{fields[0], FoldCase(fields[1])}].push_back(sense);
  }
  return table;
}

const std::vector<AmbiguousSense>* AmbiguityTable::SensesOf(
    const std::string& language, const std::string& lemma) const {
  auto it = senses_.find({language, lemma});
  return it == senses_.end() ? nullptr : &it->second;
}

std::vector<AmbiguitySite> CollectSites(const Segmentation& seg,
                                        const Report& report,
                                        const EventAnalysis& analysis,
                                        const std::vector<Mention>& mentions,
                                        const CorefResult& partition,
                                        const std::vector<Entity>& entities,
                                        const AmbiguityTable& table,
                                        const KnowledgeBase& kb) {
  (void)mentions;
  (void)kb;
  std::vector<AmbiguitySite> sites;

  // Only the writer's own account is ambiguous to the analyzer; what the
  // writer asserts about the other party is taken at face value.
  auto writer_scope = [&](int agent_mention) {
    int entity = EntityOf(partition, agent_mention);
    return entity < 0 || IsWriterEntity(entities, entity);
  };

  for (size_t e = 0; e < analysis.events.size(); ++e) {
    const Event& event = analysis.events[e];
    if (!writer_scope(event.subject_mention)) continue;
    AmbiguitySite site;
    site.clause = event.clause;
    site.event = static_cast<int>(e);
    site.anchor_token = event.predicate_token;
    site.text = ClauseText(seg, seg.clauses[event.clause], report);
    if (event.aspect == Aspect::kPluperfect &&
        event.predicate_class == WordClass::kSignalVerb) {
      site.kind = "pluperfect-reference";
      site.readings = {{"reference=accident", "correct", false},
                       {"reference=stop", "neutral", false}};
    } else if (event.aspect == Aspect::kIntentional &&
               event.predicate_class == WordClass::kMotionVerb) {
      site.kind = "intention-vs-action";
      site.readings = {{"purely-intentional", "correct", false},
                       {"action-started", "at-fault-leaning", true}};
    } else {
      continue;
    }
    sites.push_back(std::move(site));
  }

  for (size_t c = 0; c < seg.clauses.size(); ++c) {
    const Clause& clause = seg.clauses[c];
    if (!writer_scope(analysis.clause_agent[c])) continue;
    for (int i = clause.begin_token; i < clause.end_token; ++i) {
      if (seg.tokens[i].is_punct) continue;
      const auto* senses = table.SensesOf(report.language, seg.tokens[i].lemma);
      if (senses == nullptr) continue;
      AmbiguitySite site;
      site.kind = "lexical";
      site.clause = static_cast<int>(c);
      site.event = -1;
      site.anchor_token = i;
      site.text = ClauseText(seg, clause, report);
      for (const AmbiguousSense& sense : *senses)
        site.readings.push_back(
            {sense.label, sense.stance, sense.explains_impact});
      sites.push_back(std::move(site));
    }
  }

  std::stable_sort(sites.begin(), sites.end(),
                   [](const AmbiguitySite& a, const AmbiguitySite& b) {
                     if (a.clause != b.clause) return a.clause < b.clause;
                     return a.anchor_token < b.anchor_token;
                   });
  return sites;
}

void ResolveSites(std::vector<AmbiguitySite>& sites) {
  bool explained = false;
  for (AmbiguitySite& site : sites) {
    int choice = -1;
    if (!explained) {
      for (size_t r = 0; r < site.readings.size(); ++r) {
        if (site.readings[r].explains_impact) {
          choice = static_cast<int>(r);
          break;
        }
      }
    }
    if (choice >= 0) {
      site.note = "resolved by accident-consistency";
    } else {
      for (const char* stance : {"correct", "neutral"}) {
        for (size_t r = 0; r < site.readings.size() && choice < 0; ++r)
          if (site.readings[r].stance == stance)
            choice = static_cast<int>(r);
        if (choice >= 0) break;
      }
      if (choice < 0) choice = 0;
      site.note = "resolved by correct-behavior preference";
    }
    site.chosen = choice;
    if (!site.readings.empty() && site.readings[choice].explains_impact)
      explained = true;
  }
}

}  // namespace constat
