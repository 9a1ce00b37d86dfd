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

#ifndef OSPEC_EVALUATE_H_
#define OSPEC_EVALUATE_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "ospec/ast.h"
#include "ospec/backend.h"
#include "ospec/binding.h"
#include "ospec/ground_program.h"
#include "ospec/plan.h"
#include "ospec/registry.h"
#include "ospec/solver.h"

namespace ospec {

// Everything up to solving: validated spec bound to its arguments and
// grounded.
struct Prepared {
  ObjectUniverse universe;
  FactBase facts;
  GroundProgram program;
};

Prepared Prepare(const SpecProgram& spec, const std::vector<ParamArg>& args,
                 const ClassRegistry& registry);

// Extracts and executes one plan per answer set.
std::vector<Solution> Materialize(const Prepared& prepared,
                                  const std::vector<AnswerSet>& answer_sets,
                                  const ClassRegistry& registry);

// bind -> encode -> ground -> solve -> extract -> execute. Returns up to
// `count` solutions (all when 0); empty when unsatisfiable. Failures surface
// as Error carrying the stage that raised them.
std::vector<Solution> Evaluate(const SpecProgram& spec,
                               const std::vector<ParamArg>& args,
                               std::size_t count, const ClassRegistry& registry,
                               bool optimize = false);
std::vector<Solution> Evaluate(const SpecProgram& spec,
                               const std::vector<ParamArg>& args,
                               std::size_t count, const ClassRegistry& registry,
                               bool optimize, SolverBackend& backend);

bool HasSolution(const std::vector<Solution>& result);

// Stateful wrapper in the style of a generated specification class:
//
//   Specification spec(source, registry);
//   spec.Evaluate({comps, 9}, 1);
//   if (spec.HasSolution()) use(spec.GetSolutions()[0].root);
class Specification {
 public:
  Specification(std::string_view source, const ClassRegistry& registry);
  Specification(SpecProgram program, const ClassRegistry& registry);

  void Evaluate(const std::vector<ParamArg>& args, std::size_t count,
                bool optimize = false);
  bool HasSolution() const { return !solutions_.empty(); }
  const std::vector<Solution>& GetSolutions() const { return solutions_; }
  const SpecProgram& program() const { return program_; }

 private:
  SpecProgram program_;
  const ClassRegistry& registry_;
  std::vector<Solution> solutions_;
};

}  // namespace ospec

#endif  // OSPEC_EVALUATE_H_
