// Copyright 2026 The ospec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ospec: solve object specifications from the command line.
//
//   ospec solve SPEC UNIVERSE [-n COUNT] [--optimize]
//               [--emit plans|ground|facts|core]
//               [--backend embedded|external] [--solver-cmd CMD]
//
// Exit status: 0 with solutions, 1 when unsatisfiable, 2 on usage or
// specification errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "ospec/backend.h"
#include "ospec/core_text.h"
#include "ospec/documents.h"
#include "ospec/error.h"
#include "ospec/evaluate.h"
#include "ospec/parser.h"
#include "ospec/records.h"

namespace {

constexpr int kSolved = 0;
constexpr int kUnsatisfiable = 1;
constexpr int kFailure = 2;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ospec::Error(ospec::Stage::kDocument, "cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct SolveOptions {
  std::string spec_path;
  std::string universe_path;
  std::size_t count = 0;
  bool optimize = false;
  std::string emit = "plans";
  std::string backend = "embedded";
  std::string solver_cmd = "clingo";
};

int Solve(const SolveOptions& opt) {
  ospec::SpecProgram spec = ospec::ParseSpec(ReadFile(opt.spec_path));
  std::vector<ospec::ParamArg> args =
      ospec::ReadUniverse(ReadFile(opt.universe_path), spec);
  auto log = std::make_shared<ospec::CallLog>();
  ospec::ClassRegistry registry = ospec::MakeRecordRegistry(spec, log);
  ospec::Prepared prepared = ospec::Prepare(spec, args, registry);

  if (opt.emit == "ground") {
    std::cout << prepared.program.ToString();
    return kSolved;
  }
  if (opt.emit == "facts") {
    std::cout << prepared.facts.ToString();
    return kSolved;
  }
  if (opt.emit == "core") {
    ospec::CoreText text = ospec::EmitCoreText(prepared.program);
    std::cout << text.program << "% atom table\n";
    std::istringstream table(text.MappingTable(prepared.program));
    for (std::string line; std::getline(table, line);) std::cout << "% " << line << "\n";
    return kSolved;
  }

  std::unique_ptr<ospec::SolverBackend> backend;
  if (opt.backend == "external") {
    backend = std::make_unique<ospec::ExternalBackend>(
        ospec::ExternalBackend::CommandRunner(opt.solver_cmd));
  } else {
    backend = std::make_unique<ospec::EmbeddedBackend>();
  }
  std::vector<ospec::AnswerSet> models =
      backend->Solve(prepared.program, opt.count, opt.optimize);

  std::vector<ospec::PlanReport> reports;
  for (const ospec::AnswerSet& model : models) {
    const std::size_t mark = log->entries.size();
    ospec::ConstructionPlan plan = ospec::ExtractPlan(model, prepared.program);
    ospec::PlanReport report{ospec::ExecutePlan(plan, registry, prepared.universe), {}};
    report.log.assign(log->entries.begin() + static_cast<std::ptrdiff_t>(mark),
                      log->entries.end());
    reports.push_back(std::move(report));
  }
  std::cout << ospec::RenderResult(reports, prepared.universe);
  return reports.empty() ? kUnsatisfiable : kSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solve object specifications and print construction plans."};
  app.require_subcommand(1);

  SolveOptions opt;
  bool seedless = true;
  CLI::App* solve = app.add_subcommand("solve", "Solve SPEC over UNIVERSE");
  solve->add_option("spec", opt.spec_path, "Specification file (.ospec)")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("universe", opt.universe_path, "Universe document (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("-n,--count", opt.count, "Number of solutions, 0 for all");
  solve->add_flag("--optimize", opt.optimize, "Return only minimal-cost solutions");
  solve->add_option("--emit", opt.emit, "Output: plans, ground, facts or core")
      ->check(CLI::IsMember({"plans", "ground", "facts", "core"}));
  solve->add_option("--backend", opt.backend, "Solver: embedded or external")
      ->check(CLI::IsMember({"embedded", "external"}));
  solve->add_option("--solver-cmd", opt.solver_cmd,
                    "External solver command; the program file is appended");
  solve->add_flag("--seedless", seedless, "Deterministic mode (always on)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kSolved : kFailure;
  }

  try {
    return Solve(opt);
  } catch (const ospec::Error& e) {
    std::cerr << "ospec: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "ospec: " << e.what() << "\n";
  }
  return kFailure;
}
