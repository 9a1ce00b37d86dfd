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

#include "ospec/evaluate.h"

#include <gtest/gtest.h>

#include <set>

#include "ospec/documents.h"
#include "ospec/error.h"
#include "ospec/parser.h"
#include "ospec/records.h"
#include "support.h"

namespace ospec {
namespace {

using testing::AcceptanceInstance;
using testing::GraphOfPlan;
using testing::NetworkInstance;
using testing::NetworkOracle;
using testing::OracleGraph;

struct NetworkRun {
  SpecProgram spec;
  std::shared_ptr<CallLog> log = std::make_shared<CallLog>();
  ClassRegistry registry;
  std::vector<ParamArg> args;
};

NetworkRun Network(const std::string& spec_path, const NetworkInstance& instance) {
  NetworkRun run;
  run.spec = ParseSpec(testing::ReadSource(spec_path));
  run.registry = MakeRecordRegistry(run.spec, run.log);
  run.args = ReadUniverse(testing::UniverseJson(instance), run.spec);
  return run;
}

std::vector<OracleGraph> Graphs(const std::vector<Solution>& solutions) {
  std::vector<OracleGraph> out;
  for (const Solution& s : solutions) {
    std::optional<OracleGraph> g = GraphOfPlan(s.plan);
    EXPECT_TRUE(g.has_value());
    if (g) out.push_back(*g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(EvaluateTest, NetworkMatchesOracle) {
  const NetworkInstance instance = AcceptanceInstance();
  NetworkRun run = Network("specs/network.ospec", instance);
  std::vector<Solution> all = Evaluate(run.spec, run.args, 0, run.registry);
  std::vector<OracleGraph> expected = NetworkOracle(instance, instance.sockets);
  ASSERT_FALSE(expected.empty());
  EXPECT_EQ(Graphs(all), expected);
  EXPECT_EQ(all.size(), 269u);
}

TEST(EvaluateTest, NetworkByTypeMatchesOracle) {
  const NetworkInstance instance = AcceptanceInstance();
  NetworkRun run = Network("specs/network_by_type.ospec", instance);
  std::vector<Solution> all = Evaluate(run.spec, run.args, 0, run.registry);
  EXPECT_EQ(Graphs(all), NetworkOracle(instance, instance.types));
  EXPECT_EQ(all.size(), 171u);
}

TEST(EvaluateTest, SmallInstancesMatchOracle) {
  const std::vector<NetworkInstance> instances = {
      {{1}, {1}, 0},
      {{1, 1}, {1, 2}, 1},
      {{2, 1, 1}, {1, 2, 3}, 2},
      {{3, 2, 1, 1}, {1, 2, 3, 4}, 3},
      {{2, 2, 2, 2}, {1, 1, 2, 2}, 4},
      {{3, 1, 2, 1, 2}, {1, 2, 3, 4, 5}, 4},
  };
  for (const NetworkInstance& instance : instances) {
    NetworkRun run = Network("specs/network.ospec", instance);
    EXPECT_EQ(Graphs(Evaluate(run.spec, run.args, 0, run.registry)),
              NetworkOracle(instance, instance.sockets))
        << testing::UniverseJson(instance);
  }
}

TEST(EvaluateTest, ExecutedObjectsMirrorThePlan) {
  const NetworkInstance instance = AcceptanceInstance();
  NetworkRun run = Network("specs/network.ospec", instance);
  std::vector<Solution> first = Evaluate(run.spec, run.args, 1, run.registry);
  ASSERT_EQ(first.size(), 1u);
  const Solution& s = first[0];
  EXPECT_EQ(s.plan.creations.size(), 6u);
  EXPECT_EQ(s.root.class_name(), "Node");
  std::optional<OracleGraph> g = GraphOfPlan(s.plan);
  ASSERT_TRUE(g.has_value());
  for (int i = 0; i < 6; ++i) {
    const ObjectId node = ObjectId::Created("Node", {Value::Object(ObjectId::Param(i))});
    const RecordObject& record = s.objects.at(node).As<RecordObject>();
    std::size_t degree = 0;
    for (auto [a, b] : g->edges) degree += (a == i || b == i) ? 1 : 0;
    EXPECT_EQ(record.calls.size(), degree) << i;
    // The constructor received the component host.
    EXPECT_EQ(std::get<HostRef>(record.constructor_args.at(0)),
              s.objects.at(ObjectId::Param(i)));
  }
}

TEST(EvaluateTest, TooFewCablesIsUnsatisfiable) {
  NetworkInstance instance = AcceptanceInstance();
  instance.cables = 4;
  NetworkRun run = Network("specs/network.ospec", instance);
  std::vector<Solution> none = Evaluate(run.spec, run.args, 0, run.registry);
  EXPECT_TRUE(none.empty());
  EXPECT_FALSE(HasSolution(none));
  EXPECT_TRUE(NetworkOracle(instance, instance.sockets).empty());
}

TEST(EvaluateTest, CountReturnsAPrefix) {
  NetworkRun run = Network("specs/network.ospec", AcceptanceInstance());
  std::vector<Solution> all = Evaluate(run.spec, run.args, 0, run.registry);
  std::vector<Solution> some = Evaluate(run.spec, run.args, 5, run.registry);
  ASSERT_EQ(some.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(some[i].plan, all[i].plan);
}

TEST(EvaluateTest, OptimizeMinimizesEdges) {
  const NetworkInstance instance = AcceptanceInstance();
  std::string source = testing::ReadSource("specs/network.ospec");
  source.insert(source.rfind('}'), "  #minimize{edge(C1?,C2?)}.\n");
  SpecProgram spec = ParseSpec(source);
  ClassRegistry registry = MakeRecordRegistry(spec, nullptr);
  std::vector<Solution> best =
      Evaluate(spec, ReadUniverse(testing::UniverseJson(instance), spec), 0, registry, true);
  std::size_t min_edges = SIZE_MAX;
  std::vector<OracleGraph> oracle = NetworkOracle(instance, instance.sockets);
  for (const OracleGraph& g : oracle) min_edges = std::min(min_edges, g.edges.size());
  std::vector<OracleGraph> expected;
  for (const OracleGraph& g : oracle) {
    if (g.edges.size() == min_edges) expected.push_back(g);
  }
  EXPECT_EQ(Graphs(best), expected);
}

TEST(EvaluateTest, ErrorsCarryTheirStage) {
  auto stage_of = [](const std::string& source, const std::string& universe) {
    try {
      SpecProgram spec = ParseSpec(source);
      ClassRegistry registry = MakeRecordRegistry(spec, nullptr);
      Evaluate(spec, ReadUniverse(universe, spec), 0, registry);
    } catch (const Error& e) {
      return e.stage();
    }
    return Stage::kDocument;  // unused: every case below throws
  };
  EXPECT_EQ(stage_of("S(A[] a){ p(X?) :- not q(X?). }", R"({"a": []})"), Stage::kValidate);
  EXPECT_EQ(stage_of("S(A[] a){ p(X?) :- X?a(_), X?.size() > 1. }",
                     R"({"a": [{"class": "A"}]})"),
            Stage::kBind);
  EXPECT_EQ(stage_of("S(A[] a){ p(X?) :- X?a(_). }", R"({"a": [{"class": "A"}]})"),
            Stage::kExtract);
  EXPECT_EQ(stage_of("S(A[] a){ p(X?) :- X?a(_). }", R"({"b": []})"), Stage::kDocument);
}

TEST(EvaluateTest, SpecificationClass) {
  SpecProgram program = ParseSpec(testing::ReadSource("specs/network.ospec"));
  ClassRegistry registry = MakeRecordRegistry(program, nullptr);
  Specification spec(testing::ReadSource("specs/network.ospec"), registry);
  EXPECT_FALSE(spec.HasSolution());
  NetworkInstance instance = AcceptanceInstance();
  spec.Evaluate(ReadUniverse(testing::UniverseJson(instance), spec.program()), 1);
  ASSERT_TRUE(spec.HasSolution());
  EXPECT_EQ(spec.GetSolutions().size(), 1u);
  EXPECT_EQ(spec.GetSolutions()[0].root.class_name(), "Node");

  instance.cables = 4;
  spec.Evaluate(ReadUniverse(testing::UniverseJson(instance), spec.program()), 1);
  EXPECT_FALSE(spec.HasSolution());
}

TEST(EvaluateTest, ExternalBackendWithCannedOutput) {
  SpecProgram spec = ParseSpec("S(A[] a){ 1 {pick(X?) : X?a(_)} 1 :- go. go. "
                               "return X? :- pick(X?), X?a(_). }");
  ClassRegistry registry = MakeRecordRegistry(spec, nullptr);
  std::vector<ParamArg> args =
      ReadUniverse(R"({"a": [{"class": "A"}, {"class": "A"}]})", spec);
  std::string seen;
  ExternalBackend backend([&](const std::string& text) {
    seen = text;
    return std::string(
        "clingo version 5\nSolving...\n"
        "Answer: 1\ngo pick(obj(1)) ret(obj(1))\n"
        "Answer: 2\ngo pick(obj(0)) ret(obj(0))\n"
        "SATISFIABLE\n");
  });
  std::vector<Solution> external = Evaluate(spec, args, 0, registry, false, backend);
  std::vector<Solution> embedded = Evaluate(spec, args, 0, registry);
  ASSERT_EQ(external.size(), 2u);
  ASSERT_EQ(embedded.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(external[i].plan, embedded[i].plan);
  EXPECT_NE(seen.find("1 { pick(obj(0)); pick(obj(1)) } 1 :- go."), std::string::npos) << seen;
}

TEST(EvaluateTest, ExternalBackendRejectsUnstableAnswers) {
  SpecProgram spec = ParseSpec("S(A[] a){ p(X?) :- X?a(_). return X? :- p(X?), X?a(_). }");
  ClassRegistry registry = MakeRecordRegistry(spec, nullptr);
  std::vector<ParamArg> args = ReadUniverse(R"({"a": [{"class": "A"}]})", spec);
  ExternalBackend backend([](const std::string&) {
    return std::string("Answer: 1\n\nSATISFIABLE\n");
  });
  try {
    Evaluate(spec, args, 0, registry, false, backend);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.stage(), Stage::kBackend);
  }
}

}  // namespace
}  // namespace ospec
