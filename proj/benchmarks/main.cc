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

#include <benchmark/benchmark.h>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "constat/coref.h"
#include "constat/report.h"

namespace {

using constat::AnalysisReport;
using constat::Analyze;
using constat::KbBundle;
using constat::LoadReport;
using constat::Mention;
using constat::RenderJson;
using constat::Report;

const KbBundle& Bundle() {
  static const KbBundle bundle = KbBundle::Load(CONSTAT_BENCH_DATA_DIR
                                                "/kb");
  return bundle;
}

Report CorpusReport(const std::string& id) {
  return LoadReport(std::string(CONSTAT_BENCH_DATA_DIR "/corpus/") + id +
                    ".en.txt");
}

void BM_AnalyzeReport(benchmark::State& state) {
  Report report = CorpusReport("T8");
  for (auto _ : state) {
    AnalysisReport result = Analyze(report, Bundle());
    benchmark::DoNotOptimize(result.entities.size());
  }
}
BENCHMARK(BM_AnalyzeReport);

void BM_RenderReport(benchmark::State& state) {
  AnalysisReport result = Analyze(CorpusReport("T14"), Bundle());
  for (auto _ : state) {
    std::string json = RenderJson(result, false);
    benchmark::DoNotOptimize(json.size());
  }
}
BENCHMARK(BM_RenderReport);

void BM_ResolveCorpusMentions(benchmark::State& state) {
  AnalysisReport result = Analyze(CorpusReport("T8"), Bundle());
  auto forbidden = constat::ForbiddenPairs(result.mentions, result.analysis,
                                           result.segmentation, Bundle().kb);
  for (auto _ : state) {
    constat::CorefResult partition =
        constat::Resolve(result.mentions, Bundle().kb, forbidden);
    benchmark::DoNotOptimize(partition.block_count);
  }
}
BENCHMARK(BM_ResolveCorpusMentions);

// Exhaustive search over a mention list near the practical size limit.
void BM_BruteForceResolve(benchmark::State& state) {
  std::vector<Mention> mentions(static_cast<size_t>(state.range(0)));
  for (int i = 0; i < static_cast<int>(mentions.size()); ++i) {
    mentions[i].begin = i;
    mentions[i].end = i + 1;
    mentions[i].head = i;
    if (i % 3 == 0) {
      mentions[i].pronoun = true;
      mentions[i].first_person = true;
    } else if (i % 3 == 1) {
      mentions[i].vehicle_concept = "car";
    } else {
      mentions[i].person_concept = "driver";
    }
  }
  std::set<std::pair<int, int>> forbidden;
  for (auto _ : state) {
    constat::CorefResult partition =
        constat::BruteForce(mentions, Bundle().kb, forbidden);
    benchmark::DoNotOptimize(partition.block_count);
  }
}
BENCHMARK(BM_BruteForceResolve)->Arg(6)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
