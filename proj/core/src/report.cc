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

#include "constat/report.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>

#include "json.hpp"

namespace constat {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string EntityId(int entity) { return "e" + std::to_string(entity + 1); }

ordered_json EntityRef(int entity) {
  if (entity < 0) return nullptr;
  return EntityId(entity);
}

ordered_json RenderMention(const AnalysisReport& result, int index) {
  const Mention& m = result.mentions[index];
  ordered_json j;
  j["text"] = m.surface;
  j["clause"] = m.clause;
  j["facet"] = FacetName(m.facet);
  j["role"] = RoleName(m.role);
  if (m.coercion) {
    ordered_json c;
    c["kind"] = m.coercion->kind;
    c["trigger"] = SelectionalName(m.coercion->trigger);
    c["predicate"] = m.coercion->predicate;
    j["coercion"] = c;
  } else {
    j["coercion"] = nullptr;
  }
  return j;
}

std::multiset<std::string> Multiset(const std::vector<std::string>& values) {
  return {values.begin(), values.end()};
}

}  // namespace

KbBundle KbBundle::Load(const std::string& dir) {
  KbBundle bundle;
  bundle.kb = KnowledgeBase::Load(dir + "/hierarchy.tsv", dir + "/rules.tsv",
                                  dir + "/lexicon.tsv");
  bundle.morphology =
      Morphology::Load(dir + "/contractions.tsv", dir + "/irregulars.tsv");
  bundle.ambiguity = AmbiguityTable::Load(dir + "/ambiguous.tsv");
  return bundle;
}

AnalysisReport Analyze(const Report& report, const KbBundle& bundle) {
  AnalysisReport result;
  result.report = report;
  result.segmentation = Segment(report, bundle.morphology, bundle.kb);
  result.mentions = ExtractMentions(result.segmentation, report, bundle.kb);
  result.analysis = BuildEvents(result.segmentation, result.mentions, bundle.kb);
  CoerceMentions(result.mentions, result.analysis, result.segmentation,
                 bundle.kb);
  auto forbidden = ForbiddenPairs(result.mentions, result.analysis,
                                  result.segmentation, bundle.kb);
  result.partition = Resolve(result.mentions, bundle.kb, forbidden);
  result.entities = BuildEntities(result.mentions, result.partition, bundle.kb);
  result.impact =
      DetermineImpact(result.segmentation, report, result.analysis,
                      result.mentions, result.partition, result.entities,
                      bundle.kb);
  result.devices =
      DetectDevices(result.segmentation, report, result.analysis,
                    result.mentions, result.partition, result.entities,
                    bundle.kb);
  result.sites = CollectSites(result.segmentation, report, result.analysis,
                              result.mentions, result.partition,
                              result.entities, bundle.ambiguity, bundle.kb);
  ResolveSites(result.sites);

  if (result.segmentation.tokens.empty())
    result.warnings.push_back("empty-body");
  if (result.entities.size() < 2)
    result.warnings.push_back("missing-second-participant");
  if (!result.segmentation.tokens.empty()) {
    size_t first = report.body.find_first_not_of(" \t\r\n");
    size_t last = report.body.find_last_not_of(" \t\r\n");
    char opening = report.body[first];
    char closing = report.body[last];
    const std::string& first_lemma = result.segmentation.tokens[0].lemma;
    bool fragment =
        (std::islower(static_cast<unsigned char>(opening)) != 0) ||
        first_lemma == "and" || first_lemma == "but" || first_lemma == "or" ||
        (closing != '.' && closing != '?' && closing != '!');
    if (fragment) result.warnings.push_back("fragment");
  }
  return result;
}

std::string RenderJson(const AnalysisReport& result, bool pretty) {
  ordered_json j;
  j["report_id"] = result.report.id;

  j["entities"] = ordered_json::array();
  for (size_t e = 0; e < result.entities.size(); ++e) {
    const Entity& entity = result.entities[e];
    ordered_json je;
    je["id"] = EntityId(static_cast<int>(e));
    je["unit_concept"] = entity.unit_concept;
    je["person_concept"] = entity.person_concept;
    je["vehicle_concept"] = entity.vehicle_concept;
    je["label"] = entity.label;
    je["is_writer_party"] = entity.is_writer_party;
    je["facets"] = entity.facets;
    je["mentions"] = ordered_json::array();
    for (int m : entity.mentions)
      je["mentions"].push_back(RenderMention(result, m));
    j["entities"].push_back(je);
  }

  j["events"] = ordered_json::array();
  for (const Event& event : result.analysis.events) {
    ordered_json je;
    je["clause"] = event.clause;
    je["predicate"] = event.predicate;
    je["class"] = WordClassName(event.predicate_class);
    je["polarity"] = event.negated ? "negative" : "positive";
    je["modality"] = event.ability ? "ability" : "none";
    je["aspect"] = AspectName(event.aspect);
    je["agent"] = EntityRef(event.subject_mention < 0
                                ? -1
                                : result.partition.assignment
                                      [event.subject_mention]);
    je["object"] = EntityRef(event.object_mention < 0
                                 ? -1
                                 : result.partition.assignment
                                       [event.object_mention]);
    je["text"] = ClauseText(result.segmentation,
                            result.segmentation.clauses[event.clause],
                            result.report);
    j["events"].push_back(je);
  }

  ordered_json ji;
  ji["status"] = ImpactStatusName(result.impact.status);
  ji["clues"] = ordered_json::array();
  for (const ImpactClue& clue : result.impact.clues) {
    ordered_json jc;
    jc["kind"] = clue.kind;
    jc["clause"] = clue.clause;
    jc["text"] = clue.text;
    ji["clues"].push_back(jc);
  }
  ji["participants"] = ordered_json::array();
  for (int p : result.impact.participants)
    ji["participants"].push_back(EntityId(p));
  j["impact"] = ji;

  j["devices"] = ordered_json::array();
  for (const Device& device : result.devices) {
    ordered_json jd;
    jd["kind"] = device.kind;
    jd["strategy"] = device.strategy;
    jd["clause"] = device.clause;
    jd["text"] = device.text;
    jd["rule"] = device.rule.empty() ? ordered_json(nullptr)
                                     : ordered_json(device.rule);
    jd["entity"] = EntityRef(device.entity);
    jd["self_exculpatory"] = device.self_exculpatory;
    j["devices"].push_back(jd);
  }

  j["ambiguity_sites"] = ordered_json::array();
  for (const AmbiguitySite& site : result.sites) {
    ordered_json js;
    js["kind"] = site.kind;
    js["clause"] = site.clause;
    js["text"] = site.text;
    js["readings"] = ordered_json::array();
    for (const Reading& reading : site.readings) {
      ordered_json jr;
      jr["label"] = reading.label;
      jr["stance"] = reading.stance;
      jr["explains_impact"] = reading.explains_impact;
      js["readings"].push_back(jr);
    }
    ordered_json jchosen;
    jchosen["label"] =
        site.chosen >= 0 ? ordered_json(site.readings[site.chosen].label)
                         : ordered_json(nullptr);
    jchosen["note"] = site.note;
    js["chosen"] = jchosen;
    j["ambiguity_sites"].push_back(js);
  }

  j["warnings"] = result.warnings;

  return pretty ? j.dump(2) : j.dump();
}

GoldAnnotation LoadGold(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw KnowledgeError("cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw KnowledgeError(path + ": " + e.what());
  }
  GoldAnnotation gold;
  try {
    gold.report_id = j.at("report_id").get<std::string>();
    gold.expected_entity_count = j.at("expected_entity_count").get<int>();
    gold.expected_impact_status =
        j.at("expected_impact_status").get<std::string>();
    gold.expected_clue_kinds =
        j.at("expected_clue_kinds").get<std::vector<std::string>>();
    gold.expected_device_kinds =
        j.at("expected_device_kinds").get<std::vector<std::string>>();
    for (const auto& r : j.value("expected_chosen_readings",
                                 ordered_json::array()))
      gold.expected_chosen_readings.emplace_back(
          r.at("site").get<std::string>(), r.at("label").get<std::string>());
  } catch (const std::exception& e) {
    throw KnowledgeError(path + ": " + e.what());
  }
  return gold;
}

GoldComparison CompareGold(const AnalysisReport& result,
                           const GoldAnnotation& gold) {
  GoldComparison comparison;
  auto fail = [&](const std::string& problem) {
    comparison.passed = false;
    comparison.problems.push_back(problem);
  };

  int entity_count = static_cast<int>(result.entities.size());
  if (entity_count != gold.expected_entity_count)
    fail("entity count " + std::to_string(entity_count) + ", expected " +
         std::to_string(gold.expected_entity_count));

  std::string status = ImpactStatusName(result.impact.status);
  if (status != gold.expected_impact_status)
    fail("impact status " + status + ", expected " +
         gold.expected_impact_status);

  auto check_kinds = [&](const std::string& what,
                         const std::vector<std::string>& expected,
                         const std::vector<std::string>& actual) {
    auto want = Multiset(expected);
    auto have = Multiset(actual);
    for (const std::string& kind : want) {
      auto it = have.find(kind);
      if (it == have.end())
        fail("missing " + what + " " + kind);
      else
        have.erase(it);
    }
    for (const std::string& kind : have)
      comparison.extras.push_back("extra " + what + " " + kind);
  };

  std::vector<std::string> clue_kinds;
  for (const ImpactClue& clue : result.impact.clues)
    clue_kinds.push_back(clue.kind);
  check_kinds("clue kind", gold.expected_clue_kinds, clue_kinds);

  std::vector<std::string> device_kinds;
  for (const Device& device : result.devices)
    device_kinds.push_back(device.kind);
  check_kinds("device kind", gold.expected_device_kinds, device_kinds);

  std::vector<bool> used(result.sites.size(), false);
  for (const auto& [site_kind, label] : gold.expected_chosen_readings) {
    bool found = false;
    for (size_t s = 0; s < result.sites.size() && !found; ++s) {
      const AmbiguitySite& site = result.sites[s];
      if (used[s] || site.kind != site_kind || site.chosen < 0) continue;
      if (site.readings[site.chosen].label != label) continue;
      used[s] = true;
      found = true;
    }
    if (!found) fail("missing chosen reading " + site_kind + ":" + label);
  }
  for (size_t s = 0; s < result.sites.size(); ++s) {
    if (used[s] || result.sites[s].chosen < 0) continue;
    comparison.extras.push_back(
        "extra chosen reading " + result.sites[s].kind + ":" +
        result.sites[s].readings[result.sites[s].chosen].label);
  }
  return comparison;
}

int RunCorpus(const std::string& corpus_dir, const std::string& gold_dir,
              const KbBundle& bundle, std::ostream& out) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(corpus_dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      files.push_back(entry.path());
  }
  if (ec) {
    out << "error: cannot read " << corpus_dir << ": " << ec.message() << "\n";
    return 2;
  }
  std::sort(files.begin(), files.end());

  out << std::left << std::setw(8) << "report" << std::right << std::setw(9)
      << "entities" << std::setw(10) << "impact" << std::setw(8) << "accuse"
      << std::setw(10) << "exculpate" << std::setw(7) << "sites";
  if (!gold_dir.empty()) out << "  gold";
  out << "\n";

  bool mismatch = false;
  int passed = 0;
  for (const fs::path& path : files) {
    AnalysisReport result;
    try {
      Report report = LoadReport(path.string());
      result = Analyze(report, bundle);
    } catch (const std::exception& e) {
      out << "error: " << path.string() << ": " << e.what() << "\n";
      return 2;
    }
    int accusations = 0;
    int exculpations = 0;
    for (const Device& device : result.devices)
      (device.strategy == "accusation" ? accusations : exculpations) += 1;
    out << std::left << std::setw(8) << result.report.id << std::right
        << std::setw(9) << result.entities.size() << std::setw(10)
        << ImpactStatusName(result.impact.status) << std::setw(8)
        << accusations << std::setw(10) << exculpations << std::setw(7)
        << result.sites.size();
    if (!gold_dir.empty()) {
      GoldComparison comparison;
      try {
        GoldAnnotation gold =
            LoadGold(gold_dir + "/" + result.report.id + ".gold.json");
        comparison = CompareGold(result, gold);
      } catch (const std::exception& e) {
        out << "\nerror: " << e.what() << "\n";
        return 2;
      }
      out << "  " << (comparison.passed ? "PASS" : "FAIL");
      if (comparison.passed) ++passed;
      mismatch = mismatch || !comparison.passed;
      out << "\n";
      for (const std::string& problem : comparison.problems)
        out << "        " << result.report.id << ": " << problem << "\n";
      for (const std::string& extra : comparison.extras)
        out << "        " << result.report.id << ": note: " << extra << "\n";
    } else {
      out << "\n";
    }
  }
  out << files.size() << " reports";
  if (!gold_dir.empty()) out << ", " << passed << " passed the gold check";
  out << "\n";
  return mismatch ? 1 : 0;
}

}  // namespace constat
