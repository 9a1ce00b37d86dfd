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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
// when any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ospec/backend.h"
#include "ospec/core_text.h"
#include "ospec/documents.h"
#include "ospec/evaluate.h"
#include "ospec/grounder.h"
#include "ospec/parser.h"
#include "ospec/records.h"
#include "ospec/solver.h"
#include "support.h"

namespace ospec {
namespace {

namespace t = ospec::testing;

// Result of one criterion: a verdict and a one-line summary.
struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome Check(bool pass, std::string detail) { return Outcome{pass, std::move(detail)}; }

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

std::string Fixed(double v) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << v;
  return out.str();
}

std::set<std::string> RenderSet(const GroundProgram& p, const std::vector<AnswerSet>& models) {
  std::vector<std::string> r = t::Render(p, models);
  return {r.begin(), r.end()};
}

Outcome ToyProgram() {
  const auto start = std::chrono::steady_clock::now();
  const std::string toy = "Toy(){ a(o) :- not b(o). b(o) :- not a(o). c(o). }";
  SpecProgram spec = ParseSpec(toy);
  GroundProgram p = Ground(spec, FactBase{}, ObjectUniverse{});
  std::set<std::string> models = RenderSet(p, Enumerate({p}));
  std::set<std::string> oracle = RenderSet(p, BruteForceModels(p));

  SpecProgram constrained = ParseSpec("Toy(){ a(o) :- not b(o). b(o) :- not a(o). c(o). :- a(o). }");
  GroundProgram q = Ground(constrained, FactBase{}, ObjectUniverse{});
  std::set<std::string> after = RenderSet(q, Enumerate({q}));
  const double secs = Seconds(start);

  const std::set<std::string> expected{"{a(o), c(o)}", "{b(o), c(o)}"};
  const std::set<std::string> expected_after{"{b(o), c(o)}"};
  return Check(models == expected && oracle == expected && after == expected_after && secs < 1.0,
               std::to_string(models.size()) + " answer sets, " + std::to_string(after.size()) +
                   " after \":- a(o).\", " + Fixed(secs) + " s");
}

Outcome CardinalitySemantics() {
  std::mt19937_64 rng(2);
  GroundCardinality card;
  card.lower = 2;
  card.upper = 4;
  card.literals = {0, 1, 2, 3, 4};
  int discrepancies = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<bool> truth(5);
    int count = 0;
    for (std::size_t k = 0; k < 5; ++k) {
      truth[k] = (rng() & 1U) != 0;
      count += truth[k] ? 1 : 0;
    }
    if (EvaluateCardinality(card, truth) != (count >= 2 && count <= 4)) ++discrepancies;
  }
  return Check(discrepancies == 0,
               "1000 assignments, " + std::to_string(discrepancies) + " discrepancies");
}

Outcome OracleEquivalence() {
  const auto start = std::chrono::steady_clock::now();
  int discrepancies = 0;
  std::size_t models = 0;
  const int programs = 1000;
  for (int seed = 0; seed < programs; ++seed) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed) + 7000);
    GroundProgram p = t::RandomProgram(rng, {8, 12, 2});
    std::vector<AnswerSet> a = Enumerate({p});
    std::vector<AnswerSet> b = BruteForceModels(p);
    models += b.size();
    if (RenderSet(p, a) != RenderSet(p, b) || a.size() != b.size()) ++discrepancies;
  }
  const double secs = Seconds(start);
  return Check(discrepancies == 0 && secs < 60.0,
               std::to_string(programs) + " programs, " + std::to_string(models) +
                   " models, " + std::to_string(discrepancies) + " discrepancies, " +
                   Fixed(secs) + " s");
}

struct NetworkSetup {
  SpecProgram spec;
  std::shared_ptr<CallLog> log = std::make_shared<CallLog>();
  ClassRegistry registry;
  std::vector<ParamArg> args;
};

NetworkSetup Network(std::string source, const t::NetworkInstance& instance) {
  NetworkSetup s;
  s.spec = ParseSpec(source);
  s.registry = MakeRecordRegistry(s.spec, s.log);
  s.args = ReadUniverse(t::UniverseJson(instance), s.spec);
  return s;
}

// Graphs of the plans, or the number of plans that do not read as a graph.
std::pair<std::vector<t::OracleGraph>, int> Graphs(const std::vector<Solution>& solutions) {
  std::vector<t::OracleGraph> out;
  int unreadable = 0;
  for (const Solution& s : solutions) {
    std::optional<t::OracleGraph> g = t::GraphOfPlan(s.plan);
    if (g) {
      out.push_back(*g);
    } else {
      ++unreadable;
    }
  }
  std::sort(out.begin(), out.end());
  return {out, unreadable};
}

Outcome NetworkEndToEnd() {
  const auto start = std::chrono::steady_clock::now();
  const t::NetworkInstance instance = t::AcceptanceInstance();
  NetworkSetup s = Network(t::ReadSource("specs/network.ospec"), instance);
  std::vector<Solution> solutions = Evaluate(s.spec, s.args, 0, s.registry);
  auto [graphs, unreadable] = Graphs(solutions);
  std::vector<t::OracleGraph> oracle = t::NetworkOracle(instance, instance.sockets);
  const double secs = Seconds(start);
  // Sorted equality of the graph lists with no duplicates on either side is
  // a bijection; the return node is part of each graph.
  const bool distinct = std::adjacent_find(graphs.begin(), graphs.end()) == graphs.end();
  return Check(graphs == oracle && distinct && unreadable == 0 && secs < 30.0,
               std::to_string(solutions.size()) + " plans, " + std::to_string(oracle.size()) +
                   " oracle graphs, " + Fixed(secs) + " s");
}

Outcome Minimize() {
  const t::NetworkInstance instance = t::AcceptanceInstance();
  std::string source = t::ReadSource("specs/network.ospec");
  source.insert(source.rfind('}'), "  #minimize{edge(C1?,C2?)}.\n");
  NetworkSetup s = Network(source, instance);
  std::vector<Solution> best = Evaluate(s.spec, s.args, 0, s.registry, true);
  auto [graphs, unreadable] = Graphs(best);

  std::vector<t::OracleGraph> oracle = t::NetworkOracle(instance, instance.sockets);
  std::size_t min_edges = SIZE_MAX;
  for (const t::OracleGraph& g : oracle) min_edges = std::min(min_edges, g.edges.size());
  std::vector<t::OracleGraph> minimal;
  for (const t::OracleGraph& g : oracle) {
    if (g.edges.size() == min_edges) minimal.push_back(g);
  }
  bool all_minimal = !graphs.empty();
  for (const t::OracleGraph& g : graphs) all_minimal &= g.edges.size() == min_edges;
  return Check(all_minimal && graphs == minimal && unreadable == 0,
               std::to_string(best.size()) + " plans with " + std::to_string(min_edges) +
                   " edges, oracle has " + std::to_string(minimal.size()));
}

Outcome Unsatisfiable() {
  t::NetworkInstance instance = t::AcceptanceInstance();
  instance.cables = 4;
  SpecProgram program = ParseSpec(t::ReadSource("specs/network.ospec"));
  ClassRegistry registry = MakeRecordRegistry(program, nullptr);
  Specification spec(program, registry);
  spec.Evaluate(ReadUniverse(t::UniverseJson(instance), spec.program()), 0);
  const bool empty = spec.GetSolutions().empty();
  return Check(empty && !spec.HasSolution(),
               "nrCables = 4: " + std::to_string(spec.GetSolutions().size()) +
                   " solutions, has_solution = " + (spec.HasSolution() ? "true" : "false"));
}

Outcome ExecutionFaithfulness() {
  SpecProgram spec = ParseSpec(t::kRecordSpec);
  auto log = std::make_shared<CallLog>();
  ClassRegistry registry = MakeRecordRegistry(spec, log);
  int violations = 0;
  int staged = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed + 500);
    log->entries.clear();
    GroundProgram program;
    AnswerSet model;
    for (const GroundAtom& a : t::RandomPlanAtoms(rng, 3)) model.atoms.push_back(program.Intern(a));
    std::sort(model.atoms.begin(), model.atoms.end());
    std::vector<HostRef> hosts;
    for (int i = 0; i < 3; ++i) hosts.push_back(MakeRecord("A"));
    ObjectUniverse universe = BindParams(spec, {hosts}, registry);
    ConstructionPlan plan = ExtractPlan(model, program);
    std::set<std::int64_t> stages;
    for (const Invocation& inv : plan.invocations) stages.insert(inv.stage);
    staged += stages.size() > 1 ? 1 : 0;
    Solution solution = ExecutePlan(plan, registry, universe);
    violations += static_cast<int>(t::ExecutionViolations(solution, *log).size());
  }
  return Check(violations == 0 && staged > 0,
               "100 plans (" + std::to_string(staged) + " with several stages), " +
                   std::to_string(violations) + " violations");
}

#ifdef OSPEC_CLI_PATH
std::pair<int, std::string> RunCli(const std::string& args) {
  const std::string command = std::string(OSPEC_CLI_PATH) + " " + args;
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, out};
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}
#endif

Outcome CliDeterminism() {
#ifdef OSPEC_CLI_PATH
  const std::string args = "solve '" + t::SourcePath("specs/network.ospec") + "' '" +
                           t::SourcePath("specs/network_universe.json") + "' -n 0";
  auto [status_a, out_a] = RunCli(args);
  auto [status_b, out_b] = RunCli(args);
  return Check(status_a == 0 && status_b == 0 && !out_a.empty() && out_a == out_b,
               "two runs, " + std::to_string(out_a.size()) + " bytes each, " +
                   (out_a == out_b ? "identical" : "different"));
#else
  return Check(false, "CLI not built");
#endif
}

Outcome BackendEquivalence() {
  struct Golden {
    std::string name;
    GroundProgram program;
    std::string lp;          // expected core text, empty to skip
    std::string transcript;  // recorded solver output
  };
  std::vector<Golden> goldens;
  goldens.push_back({"toy", t::ToyProgram(), t::ReadSource("tests/testdata/toy.lp"),
                     t::ReadSource("tests/testdata/toy.clingo.txt")});
  t::Pipeline network = t::RunPipeline(t::ReadSource("specs/network.ospec"),
                                       t::ReadSource("tests/testdata/network4.json"));
  goldens.push_back({"network4", network.prepared.program,
                     t::ReadSource("tests/testdata/network4.lp"),
                     t::ReadSource("tests/testdata/network4.clingo.txt")});
  GroundProgram odd;
  AtomId p = odd.Intern(GroundAtom::Ordinary("p"));
  odd.AddRule(GroundRule::Normal(p, {}, {p}));
  goldens.push_back({"unsat", odd, "", t::ReadSource("tests/testdata/unsat.clingo.txt")});

  int disagreements = 0;
  std::string failed;
  for (const Golden& g : goldens) {
    bool text_ok = true;
    ExternalBackend external([&](const std::string& text) {
      if (!g.lp.empty() && text != g.lp) text_ok = false;
      return g.transcript;
    });
    EmbeddedBackend embedded;
    for (std::size_t count : {std::size_t{0}, std::size_t{1}}) {
      if (external.Solve(g.program, count, false) != embedded.Solve(g.program, count, false) ||
          !text_ok) {
        ++disagreements;
        failed += " " + g.name;
      }
    }
  }
  return Check(disagreements == 0,
               std::to_string(goldens.size()) + " golden programs, " +
                   std::to_string(disagreements) + " disagreements" + failed);
}

}  // namespace
}  // namespace ospec

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<ospec::Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "toy program", ospec::ToyProgram},
      {2, "cardinality semantics", ospec::CardinalitySemantics},
      {3, "oracle equivalence", ospec::OracleEquivalence},
      {4, "network end-to-end", ospec::NetworkEndToEnd},
      {5, "minimize", ospec::Minimize},
      {6, "unsatisfiable detection", ospec::Unsatisfiable},
      {7, "execution faithfulness", ospec::ExecutionFaithfulness},
      {8, "CLI determinism", ospec::CliDeterminism},
      {9, "backend equivalence", ospec::BackendEquivalence},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    ospec::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = ospec::Outcome{false, std::string("exception: ") + e.what()};
    }
    failures += outcome.pass ? 0 : 1;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " " << c.number << " " << c.name << ": "
              << outcome.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
