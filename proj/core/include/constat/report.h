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

#ifndef CONSTAT_REPORT_H_
#define CONSTAT_REPORT_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "constat/argumentation.h"
#include "constat/coref.h"
#include "constat/corpus.h"
#include "constat/events.h"
#include "constat/knowledge.h"
#include "constat/mentions.h"

// Whole-report analysis: the pipeline wired end to end, JSON rendering, and
// comparison against gold annotations.

namespace constat {

// All knowledge files of one directory: hierarchy.tsv, rules.tsv,
// lexicon.tsv, contractions.tsv, irregulars.tsv, ambiguous.tsv.
struct KbBundle {
  KnowledgeBase kb;
  Morphology morphology;
  AmbiguityTable ambiguity;

  static KbBundle Load(const std::string& dir);
};

struct AnalysisReport {
  Report report;
  Segmentation segmentation;
  std::vector<Mention> mentions;
  EventAnalysis analysis;
  CorefResult partition;
  std::vector<Entity> entities;
  ImpactFinding impact;
  std::vector<Device> devices;
  std::vector<AmbiguitySite> sites;
  std::vector<std::string> warnings;  // empty-body, missing-second-participant, fragment
};

// Runs the full pipeline. Output is a pure function of the report body and
// the knowledge files: repeated runs render byte-identical JSON.
AnalysisReport Analyze(const Report& report, const KbBundle& bundle);

// Compact JSON (one line); pretty = 2-space indentation. Rendering then
// parsing then rendering again reproduces the same bytes.
std::string RenderJson(const AnalysisReport& result, bool pretty);

// Expected values for one report. Entity count and impact status must match
// exactly; clue kinds, device kinds and chosen readings are required
// multisets, with analyzer extras reported but not failing.
struct GoldAnnotation {
  std::string report_id;
  int expected_entity_count = 0;
  std::string expected_impact_status;
  std::vector<std::string> expected_clue_kinds;
  std::vector<std::string> expected_device_kinds;
  // Pairs of site kind and chosen reading label.
  std::vector<std::pair<std::string, std::string>> expected_chosen_readings;
};

GoldAnnotation LoadGold(const std::string& path);

struct GoldComparison {
  bool passed = true;
  std::vector<std::string> problems;  // failing differences
  std::vector<std::string> extras;    // analyzer output beyond the gold
};

GoldComparison CompareGold(const AnalysisReport& result,
                           const GoldAnnotation& gold);

// Analyzes every <ID>.<lang>.txt under corpus_dir in filename order and
// prints one table row per report; with a gold directory, compares each
// report against <ID>.gold.json. Returns the process exit code: 0 on
// success, 1 on gold mismatch, 2 on input error.
int RunCorpus(const std::string& corpus_dir, const std::string& gold_dir,
              const KbBundle& bundle, std::ostream& out);

}  // namespace constat

#endif  // CONSTAT_REPORT_H_
