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

// Command line front end. Exit codes: 0 success, 1 gold mismatch,
// 2 input error.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "constat/report.h"

namespace {

int RunAnalyze(const std::string& file, const std::string& kb_dir,
               bool pretty) {
  try {
    constat::KbBundle bundle = constat::KbBundle::Load(kb_dir);
    constat::Report report = constat::LoadReport(file);
    constat::AnalysisReport result = constat::Analyze(report, bundle);
    std::cout << constat::RenderJson(result, pretty) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int RunCorpusCommand(const std::string& dir, const std::string& gold_dir,
                     const std::string& kb_dir) {
  try {
    constat::KbBundle bundle = constat::KbBundle::Load(kb_dir);
    return constat::RunCorpus(dir, gold_dir, bundle, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int RunKbCheck(const std::string& dir) {
  try {
    constat::KbBundle bundle = constat::KbBundle::Load(dir);
    std::cout << dir << ": " << bundle.kb.hierarchy().concepts().size()
              << " concepts, " << bundle.kb.entries().size()
              << " lexicon entries, " << bundle.kb.rules().size()
              << " traffic rules, " << bundle.morphology.contractions().size()
              << " contractions\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << "ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based analyzer for road-accident claim reports"};
  app.require_subcommand(1);

  std::string kb_dir = "data/kb";

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze one report file");
  std::string analyze_file;
  bool compact = false;
  bool pretty = false;
  analyze->add_option("file", analyze_file, "Report file (<ID>.<lang>.txt)")
      ->required();
  analyze->add_option("--kb", kb_dir, "Knowledge base directory")
      ->capture_default_str();
  analyze->add_flag("--json", compact, "Compact JSON output (default)");
  analyze->add_flag("--pretty", pretty, "Indented JSON output")
      ->excludes("--json");

  CLI::App* corpus =
      app.add_subcommand("corpus", "Analyze every report in a directory");
  std::string corpus_dir;
  std::string gold_dir;
  corpus->add_option("dir", corpus_dir, "Corpus directory")->required();
  corpus->add_option("--gold", gold_dir,
                     "Gold annotation directory (<ID>.gold.json)");
  corpus->add_option("--kb", kb_dir, "Knowledge base directory")
      ->capture_default_str();

  CLI::App* kb = app.add_subcommand("kb", "Knowledge base utilities");
  kb->require_subcommand(1);
  CLI::App* check =
      kb->add_subcommand("check", "Load and validate a knowledge base");
  std::string check_dir;
  check->add_option("dir", check_dir, "Knowledge base directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (analyze->parsed()) return RunAnalyze(analyze_file, kb_dir, pretty);
  if (corpus->parsed()) return RunCorpusCommand(corpus_dir, gold_dir, kb_dir);
  if (check->parsed()) return RunKbCheck(check_dir);
  return 2;
}
