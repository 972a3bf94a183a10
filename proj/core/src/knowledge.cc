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

#include "constat/knowledge.h"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace constat {
namespace {

struct WordClassNameEntry {
  WordClass word_class;
  const char* name;
};

constexpr WordClassNameEntry kWordClassNames[] = {
    {WordClass::kCollisionVerb, "collision-verb"},
    {WordClass::kMotionVerb, "motion-verb"},
    {WordClass::kStopVerb, "stop-verb"},
    {WordClass::kAvoidanceVerb, "avoidance-verb"},
    {WordClass::kIntentionVerb, "intention-verb"},
    {WordClass::kSignalVerb, "signal-verb"},
    {WordClass::kPerceptionVerb, "perception-verb"},
    {WordClass::kAbilityModal, "ability-modal"},
    {WordClass::kNegationMarker, "negation-marker"},
    {WordClass::kSpeedIntensifier, "speed-intensifier"},
    {WordClass::kSurpriseLexeme, "surprise-lexeme"},
    {WordClass::kSuddennessAdverb, "suddenness-adverb"},
    {WordClass::kBlameLexeme, "blame-lexeme"},
    {WordClass::kPassiveMarker, "passive-marker"},
    {WordClass::kReflexiveMotionVerb, "reflexive-motion-verb"},
    {WordClass::kImpactNoun, "impact-noun"},
    {WordClass::kVehicleNoun, "vehicle-noun"},
    {WordClass::kPersonNoun, "person-noun"},
    {WordClass::kPartNoun, "part-noun"},
    {WordClass::kDeterminer, "determiner"},
    {WordClass::kPronoun, "pronoun"},
};

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, '\t')) fields.push_back(field);
  return fields;
}

// Strips a trailing comment and surrounding whitespace. Returns true when
// the remaining line carries content.
bool CleanLine(std::string* line) {
  auto hash = line->find('#');
  if (hash != std::string::npos) line->erase(hash);
  while (!line->empty() && (line->back() == ' ' || line->back() == '\r' ||
                            line->back() == '\t')) {
    line->pop_back();
  }
  size_t start = line->find_first_not_of(" \t");
  if (start == std::string::npos) {
    line->clear();
    return false;
  }
  line->erase(0, start);
  return true;
}

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::string word;
  for (char c : text) {
    if (c == ' ') {
      if (!word.empty()) words.push_back(word);
      word.clear();
    } else {
      word.push_back(c);
    }
  }
  if (!word.empty()) words.push_back(word);
  return words;
}

}  // namespace

const char* WordClassName(WordClass word_class) {
  for (const auto& entry : kWordClassNames) {
    if (entry.word_class == word_class) return entry.name;
  }
  return "unknown";
}

std::optional<WordClass> WordClassFromName(std::string_view name) {
  for (const auto& entry : kWordClassNames) {
    if (name == entry.name) return entry.word_class;
  }
  return std::nullopt;
}

const char* SelectionalName(Selectional selectional) {
  switch (selectional) {
    case Selectional::kNone: return "-";
    case Selectional::kRequiresAgent: return "requires-agent";
    case Selectional::kRequiresPhysicalObject: return "requires-physical-object";
    case Selectional::kNeutral: return "neutral";
  }
  return "-";
}

std::vector<std::pair<int, std::string>> ReadDataLines(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw KnowledgeError("cannot open " + path);
  std::vector<std::pair<int, std::string>> lines;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (CleanLine(&line)) lines.emplace_back(number, line);
  }
  return lines;
}

std::vector<std::string> SplitTabFields(const std::string& line) {
  return SplitFields(line);
}

bool IsVerbClass(WordClass word_class) {
  switch (word_class) {
    case WordClass::kCollisionVerb:
    case WordClass::kMotionVerb:
    case WordClass::kStopVerb:
    case WordClass::kAvoidanceVerb:
    case WordClass::kIntentionVerb:
    case WordClass::kSignalVerb:
    case WordClass::kPerceptionVerb:
    case WordClass::kReflexiveMotionVerb:
      return true;
    default:
      return false;
  }
}

std::string FoldCase(std::string_view text) {
  std::string folded;
  folded.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    unsigned char c = text[i];
    if (c >= 'A' && c <= 'Z') {
      folded.push_back(c - 'A' + 'a');
    } else if (c == 0xC3 && i + 1 < text.size()) {
      // UTF-8 Latin-1 supplement: fold the uppercase range onto lowercase.
      unsigned char next = text[i + 1];
      folded.push_back(static_cast<char>(c));
      if (next >= 0x80 && next <= 0x9E && next != 0x97) next += 0x20;
      folded.push_back(static_cast<char>(next));
      ++i;
    } else {
      folded.push_back(static_cast<char>(c));
    }
  }
  return folded;
}

ParseError::ParseError(const std::string& file, int line,
                       const std::string& message)
    : KnowledgeError(file + ":" + std::to_string(line) + ": " + message),
      file_(file),
      line_(line) {}

int TypeHierarchy::Index(std::string_view concept_name) const {
  auto it = index_.find(concept_name);
  return it == index_.end() ? -1 : it->second;
}

int TypeHierarchy::RequireIndex(std::string_view concept_name) const {
  int index = Index(concept_name);
  if (index < 0) {
    throw UnknownConceptError("unknown concept: " + std::string(concept_name));
  }
  return index;
}

bool TypeHierarchy::IsSubtype(std::string_view a, std::string_view b) const {
  int ia = RequireIndex(a);
  int ib = RequireIndex(b);
  return closure_[ia][ib];
}

bool TypeHierarchy::HasConcept(std::string_view concept_name) const {
  return Index(concept_name) >= 0;
}

const std::string* TypeHierarchy::WholeOf(std::string_view part) const {
  auto it = part_whole_.find(part);
  return it == part_whole_.end() ? nullptr : &it->second;
}

int TypeHierarchy::Depth(std::string_view concept_name) const {
  return depth_[RequireIndex(concept_name)];
}

KnowledgeBase KnowledgeBase::Load(const std::string& hierarchy_path,
                                  const std::string& rules_path,
                                  const std::string& lexicon_path) {
  KnowledgeBase kb;
  TypeHierarchy& hierarchy = kb.hierarchy_;

  auto intern = [&hierarchy](const std::string& name) {
    auto it = hierarchy.index_.find(name);
    if (it != hierarchy.index_.end()) return it->second;
    int index = static_cast<int>(hierarchy.names_.size());
    hierarchy.names_.push_back(name);
    hierarchy.index_.emplace(name, index);
    return index;
  };

  std::vector<std::pair<int, int>> isa_edges;  // child -> parent
  {
    std::ifstream in(hierarchy_path);
    if (!in) throw KnowledgeError("cannot open " + hierarchy_path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!CleanLine(&line)) continue;
      auto fields = SplitFields(line);
      if (fields.size() != 3) {
        throw ParseError(hierarchy_path, line_no, "expected 3 fields");
      }
      const std::string& relation = fields[1];
      if (relation == "isa") {
        isa_edges.emplace_back(intern(FoldCase(fields[0])),
                               intern(FoldCase(fields[2])));
      } else if (relation == "partof") {
        std::string part = FoldCase(fields[0]);
        std::string whole = FoldCase(fields[2]);
        intern(part);
        hierarchy.part_whole_[part] = whole;
      } else {
        throw ParseError(hierarchy_path, line_no,
                         "unknown relation '" + relation + "'");
      }
    }
  }

  // Part-of wholes must name known concepts.
  for (const auto& [part, whole] : hierarchy.part_whole_) {
    if (hierarchy.Index(whole) < 0) {
      throw UnknownConceptError("partof link from '" + part +
                                "' names unknown whole '" + whole + "'");
    }
  }

  // Reflexive-transitive closure over the subtype DAG, with cycle detection
  // via iterative deepening of the reachability fixpoint.
  size_t n = hierarchy.names_.size();
  std::vector<std::vector<int>> parents(n);
  for (auto [child, parent] : isa_edges) parents[child].push_back(parent);
  hierarchy.closure_.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) hierarchy.closure_[i][i] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t child = 0; child < n; ++child) {
      for (int parent : parents[child]) {
        for (size_t target = 0; target < n; ++target) {
          if (hierarchy.closure_[parent][target] &&
              !hierarchy.closure_[child][target]) {
            hierarchy.closure_[child][target] = true;
            changed = true;
          }
        }
      }
    }
  }
  for (size_t child = 0; child < n; ++child) {
    for (int parent : parents[child]) {
      if (hierarchy.closure_[parent][child]) {
        throw CycleError("subtype cycle through '" + hierarchy.names_[child] +
                         "'");
      }
    }
  }

  // Single root: every concept must reach "entity".
  hierarchy.root_ = "entity";
  int root = hierarchy.Index("entity");
  if (root < 0) throw KnowledgeError("hierarchy has no root concept 'entity'");
  for (size_t i = 0; i < n; ++i) {
    if (!hierarchy.closure_[i][root]) {
      throw KnowledgeError("concept '" + hierarchy.names_[i] +
                           "' does not reach the root 'entity'");
    }
  }
  hierarchy.depth_.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    int depth = 0;
    for (size_t j = 0; j < n; ++j) {
      if (hierarchy.closure_[i][j]) ++depth;
    }
    hierarchy.depth_[i] = depth;
  }

  {
    std::ifstream in(rules_path);
    if (!in) throw KnowledgeError("cannot open " + rules_path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!CleanLine(&line)) continue;
      auto fields = SplitFields(line);
      if (fields.size() != 2) {
        throw ParseError(rules_path, line_no, "expected 2 fields");
      }
      TrafficRule rule;
      rule.id = fields[0];
      rule.description = fields[1];
      for (const auto& existing : kb.rules_) {
        if (existing.id == rule.id) {
          throw ParseError(rules_path, line_no,
                           "duplicate rule id '" + rule.id + "'");
        }
      }
      kb.rules_.push_back(std::move(rule));
    }
  }

  // Event patterns that imply a rule violation. The rules file only names
  // rules; the pattern association is fixed here.
  static const std::pair<const char*, const char*> kViolationPatterns[] = {
      {"pass-on-right-side", "pass-on-left"},
      {"ignore-lane-arrows", "obey-lane-markings"},
      {"deny-priority-from-right", "priority-to-right"},
      {"highbeam-glare", "headlights-dipped"},
      {"excessive-speed", "speed-limit"},
  };
  for (auto& rule : kb.rules_) {
    for (const auto& [pattern, rule_id] : kViolationPatterns) {
      if (rule.id == rule_id) rule.violation_patterns.push_back(pattern);
    }
  }

  {
    std::ifstream in(lexicon_path);
    if (!in) throw KnowledgeError("cannot open " + lexicon_path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!CleanLine(&line)) continue;
      auto fields = SplitFields(line);
      if (fields.size() < 3 || fields.size() > 5) {
        throw ParseError(lexicon_path, line_no, "expected 3 to 5 fields");
      }
      LexiconEntry entry;
      entry.lemma = FoldCase(fields[1]);
      auto word_class = WordClassFromName(fields[2]);
      if (!word_class) {
        throw ParseError(lexicon_path, line_no,
                         "unknown word class '" + fields[2] + "'");
      }
      entry.word_class = *word_class;
      if (fields.size() > 3 && fields[3] != "-" && !fields[3].empty()) {
        entry.concept_name = FoldCase(fields[3]);
      }
      if (fields.size() > 4 && fields[4] != "-" && !fields[4].empty()) {
        if (fields[4] == "requires-agent") {
          entry.selectional = Selectional::kRequiresAgent;
        } else if (fields[4] == "requires-physical-object") {
          entry.selectional = Selectional::kRequiresPhysicalObject;
        } else if (fields[4] == "neutral") {
          entry.selectional = Selectional::kNeutral;
        } else {
          throw ParseError(lexicon_path, line_no,
                           "unknown selectional '" + fields[4] + "'");
        }
      }
      bool is_noun = entry.word_class == WordClass::kVehicleNoun ||
                     entry.word_class == WordClass::kPersonNoun ||
                     entry.word_class == WordClass::kPartNoun;
      if (is_noun) {
        if (entry.concept_name.empty()) {
          throw ParseError(lexicon_path, line_no,
                           "noun entry '" + entry.lemma + "' needs a concept");
        }
        if (!hierarchy.HasConcept(entry.concept_name)) {
          throw UnknownConceptError("lexicon entry '" + entry.lemma +
                                    "' names unknown concept '" +
                                    entry.concept_name + "'");
        }
      }
      for (int existing : kb.by_lemma_[entry.lemma]) {
        if (kb.entries_[existing].word_class == entry.word_class) {
          throw ParseError(lexicon_path, line_no,
                           "duplicate entry for lemma '" + entry.lemma + "'");
        }
      }
      int index = static_cast<int>(kb.entries_.size());
      kb.by_lemma_[entry.lemma].push_back(index);
      auto words = SplitWords(entry.lemma);
      if (words.size() > 1) {
        kb.multiword_[entry.word_class].push_back(std::move(words));
      }
      kb.entries_.push_back(std::move(entry));
    }
  }
  for (auto& [word_class, lemmas] : kb.multiword_) {
    std::stable_sort(lemmas.begin(), lemmas.end(),
                     [](const auto& a, const auto& b) {
                       return a.size() > b.size();
                     });
  }
  return kb;
}

std::vector<LexiconEntry> KnowledgeBase::Lookup(std::string_view lemma) const {
  std::vector<LexiconEntry> result;
  auto it = by_lemma_.find(FoldCase(lemma));
  if (it == by_lemma_.end()) return result;
  for (int index : it->second) result.push_back(entries_[index]);
  return result;
}

const LexiconEntry* KnowledgeBase::Find(std::string_view lemma,
                                        WordClass word_class) const {
  auto it = by_lemma_.find(FoldCase(lemma));
  if (it == by_lemma_.end()) return nullptr;
  for (int index : it->second) {
    if (entries_[index].word_class == word_class) return &entries_[index];
  }
  return nullptr;
}

const TrafficRule* KnowledgeBase::FindRule(std::string_view id) const {
  for (const auto& rule : rules_) {
    if (rule.id == id) return &rule;
  }
  return nullptr;
}

const std::vector<std::vector<std::string>>& KnowledgeBase::MultiwordLemmas(
    WordClass word_class) const {
  static const std::vector<std::vector<std::string>> kEmpty;
  auto it = multiword_.find(word_class);
  return it == multiword_.end() ? kEmpty : it->second;
}

}  // namespace constat
