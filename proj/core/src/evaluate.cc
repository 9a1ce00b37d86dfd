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

#include "ospec/error.h"
#include "ospec/grounder.h"
#include "ospec/parser.h"
#include "ospec/validate.h"

namespace ospec {

namespace {

// Runs `fn`, re-raising foreign exceptions as Error of `stage`.
template <class F>
auto InStage(Stage stage, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(stage, e.what());
  }
}

}  // namespace

Prepared Prepare(const SpecProgram& spec, const std::vector<ParamArg>& args,
                 const ClassRegistry& registry) {
  InStage(Stage::kValidate, [&] { ValidateOrThrow(spec); });
  Prepared p;
  InStage(Stage::kBind, [&] {
    CheckRegistryCoverage(spec, registry);
    p.universe = BindParams(spec, args, registry);
    p.facts = EncodeFacts(p.universe);
  });
  p.program = InStage(Stage::kGround, [&] { return Ground(spec, p.facts, p.universe); });
  return p;
}

std::vector<Solution> Materialize(const Prepared& prepared,
                                  const std::vector<AnswerSet>& answer_sets,
                                  const ClassRegistry& registry) {
  std::vector<Solution> out;
  out.reserve(answer_sets.size());
  for (const AnswerSet& as : answer_sets) {
    ConstructionPlan plan =
        InStage(Stage::kExtract, [&] { return ExtractPlan(as, prepared.program); });
    out.push_back(InStage(Stage::kExecute, [&] {
      return ExecutePlan(plan, registry, prepared.universe);
    }));
  }
  return out;
}

std::vector<Solution> Evaluate(const SpecProgram& spec,
                               const std::vector<ParamArg>& args,
                               std::size_t count, const ClassRegistry& registry,
                               bool optimize, SolverBackend& backend) {
  Prepared prepared = Prepare(spec, args, registry);
  std::vector<AnswerSet> models = InStage(Stage::kSolve, [&] {
    return backend.Solve(prepared.program, count, optimize);
  });
  return Materialize(prepared, models, registry);
}

std::vector<Solution> Evaluate(const SpecProgram& spec,
                               const std::vector<ParamArg>& args,
                               std::size_t count, const ClassRegistry& registry,
                               bool optimize) {
  EmbeddedBackend backend;
  return Evaluate(spec, args, count, registry, optimize, backend);
}

bool HasSolution(const std::vector<Solution>& result) { return !result.empty(); }

Specification::Specification(std::string_view source, const ClassRegistry& registry)
    : program_(ParseSpec(source)), registry_(registry) {}

Specification::Specification(SpecProgram program, const ClassRegistry& registry)
    : program_(std::move(program)), registry_(registry) {}

void Specification::Evaluate(const std::vector<ParamArg>& args, std::size_t count,
                             bool optimize) {
  solutions_.clear();
  solutions_ = ospec::Evaluate(program_, args, count, registry_, optimize);
}

}  // namespace ospec
