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

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "ospec/documents.h"
#include "ospec/evaluate.h"
#include "ospec/grounder.h"
#include "ospec/parser.h"
#include "ospec/records.h"
#include "ospec/solver.h"

namespace {

std::string NetworkSource() {
  std::ifstream in(std::string(OSPEC_SOURCE_DIR) + "/specs/network.ospec");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// n components with socket counts cycling 1..3 and enough cables for a tree
// plus two.
std::string Universe(int n) {
  std::ostringstream out;
  out << "{\"comps\": [";
  for (int i = 0; i < n; ++i) {
    out << (i ? ", " : "") << "{\"class\": \"Component\", \"methods\": {\"getNrSock\": "
        << (i % 4) + 1 << "}}";
  }
  out << "], \"nrCables\": " << n + 1 << "}";
  return out.str();
}

struct Network {
  explicit Network(int n)
      : spec(ospec::ParseSpec(NetworkSource())),
        registry(ospec::MakeRecordRegistry(spec, nullptr)),
        args(ospec::ReadUniverse(Universe(n), spec)) {}
  ospec::SpecProgram spec;
  ospec::ClassRegistry registry;
  std::vector<ospec::ParamArg> args;
};

void BM_Parse(benchmark::State& state) {
  const std::string source = NetworkSource();
  for (auto _ : state) benchmark::DoNotOptimize(ospec::ParseSpec(source));
}
BENCHMARK(BM_Parse);

void BM_GroundNetwork(benchmark::State& state) {
  Network net(static_cast<int>(state.range(0)));
  std::size_t rules = 0;
  for (auto _ : state) {
    ospec::Prepared p = ospec::Prepare(net.spec, net.args, net.registry);
    rules = p.program.rules().size();
  }
  state.counters["rules"] = static_cast<double>(rules);
}
BENCHMARK(BM_GroundNetwork)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_FirstModel(benchmark::State& state) {
  Network net(static_cast<int>(state.range(0)));
  ospec::Prepared p = ospec::Prepare(net.spec, net.args, net.registry);
  for (auto _ : state) benchmark::DoNotOptimize(ospec::Enumerate({p.program, 1}));
}
BENCHMARK(BM_FirstModel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_AllModels(benchmark::State& state) {
  Network net(static_cast<int>(state.range(0)));
  ospec::Prepared p = ospec::Prepare(net.spec, net.args, net.registry);
  std::size_t models = 0;
  for (auto _ : state) models = ospec::Enumerate({p.program}).size();
  state.counters["models"] = static_cast<double>(models);
}
BENCHMARK(BM_AllModels)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

void BM_EvaluateFirstPlan(benchmark::State& state) {
  Network net(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ospec::Evaluate(net.spec, net.args, 1, net.registry));
  }
}
BENCHMARK(BM_EvaluateFirstPlan)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
