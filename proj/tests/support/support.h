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

#ifndef OSPEC_TESTS_SUPPORT_SUPPORT_H_
#define OSPEC_TESTS_SUPPORT_SUPPORT_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ospec/ast.h"
#include "ospec/evaluate.h"
#include "ospec/ground_program.h"
#include "ospec/records.h"
#include "ospec/solver.h"

namespace ospec::testing {

// Path of a file below the source tree, e.g. "specs/network.ospec".
std::string SourcePath(std::string_view relative);
std::string ReadSource(std::string_view relative);

// The two-answer-set program over the constant o:
//   a(o) :- not b(o).   b(o) :- not a(o).   c(o).
GroundProgram ToyProgram();
AtomId ToyAtom(const GroundProgram& program, const std::string& predicate);

// Atoms of `models` rendered as "{a(o), c(o)}" strings, in model order.
std::vector<std::string> Render(const GroundProgram& program,
                                const std::vector<AnswerSet>& models);

// A specification grounded over a record universe.
struct Pipeline {
  SpecProgram spec;
  std::shared_ptr<CallLog> log;
  ClassRegistry registry;
  Prepared prepared;
};
Pipeline RunPipeline(std::string_view spec_source, std::string_view universe_json);

struct RandomProgramShape {
  int max_atoms = 8;
  int max_rules = 12;
  int max_cards = 2;
};

// Random ground program over atoms q(0..n-1): normal rules, integrity
// constraints and choice rules with default negation and at most
// `max_cards` body cardinality literals in total.
GroundProgram RandomProgram(std::mt19937_64& rng, const RandomProgramShape& shape = {});

// Atoms of a random answer set describing a plan over `params` parameter
// objects: up to 4 Box creations (arguments are parameter objects), up to 8
// staged calls of m(i, object), and one return, in shuffled order.
std::vector<GroundAtom> RandomPlanAtoms(std::mt19937_64& rng, int params);

// Record spec whose registry serves the plans of RandomPlanAtoms.
inline constexpr const char* kRecordSpec =
    "S(A[] a){ new Box(X?) :- X?a(_). exe X?.m() :- X?a(_). return X? :- X?a(0). }";

// Differences between an executed plan and the call log it produced: log
// entries out of plan order, calls that reached the wrong host, arguments
// that resolved to the wrong object, stages out of order. Empty when the
// execution was faithful.
std::vector<std::string> ExecutionViolations(const Solution& solution, const CallLog& log);

// Component instance used by the network tests.
struct NetworkInstance {
  std::vector<int> sockets;
  std::vector<int> types;
  int cables = 9;
};
NetworkInstance AcceptanceInstance();
std::string UniverseJson(const NetworkInstance& instance);

// One valid graph: undirected edges (i < j) and the index of the returned
// component.
struct OracleGraph {
  std::set<std::pair<int, int>> edges;
  int returned = -1;

  friend bool operator<(const OracleGraph& a, const OracleGraph& b) {
    return std::tie(a.edges, a.returned) < std::tie(b.edges, b.returned);
  }
  friend bool operator==(const OracleGraph&, const OracleGraph&) = default;
};

// Enumerates all subsets of the candidate edges of the complete graph and
// keeps connected graphs within the socket and cable limits that have no
// edge between components with equal `key`.
std::vector<OracleGraph> NetworkOracle(const NetworkInstance& instance,
                                       const std::vector<int>& key);

// Reads an executed plan of the network spec back as a graph. Directed
// addNode calls must come in symmetric pairs; otherwise returns nullopt.
std::optional<OracleGraph> GraphOfPlan(const ConstructionPlan& plan);

}  // namespace ospec::testing

#endif  // OSPEC_TESTS_SUPPORT_SUPPORT_H_
