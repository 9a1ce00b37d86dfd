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

#ifndef OSPEC_BACKEND_H_
#define OSPEC_BACKEND_H_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ospec/ground_program.h"
#include "ospec/solver.h"

namespace ospec {

// Source of answer sets for a ground program. Implementations return models
// in the order Enumerate uses, capped at `count` (0 = all), minimal-cost
// only when `optimize` is set.
class SolverBackend {
 public:
  virtual ~SolverBackend() = default;
  virtual std::string name() const = 0;
  virtual std::vector<AnswerSet> Solve(const GroundProgram& program,
                                       std::size_t count, bool optimize) = 0;
};

class EmbeddedBackend : public SolverBackend {
 public:
  std::string name() const override { return "embedded"; }
  std::vector<AnswerSet> Solve(const GroundProgram& program, std::size_t count,
                               bool optimize) override;
};

// Hands the core-text rendering to an external solver and maps its answers
// back. The solver is asked for all models of the program without the
// minimize statement. Models are sorted, filtered by cost and capped here,
// after each one passes a stability check.
class ExternalBackend : public SolverBackend {
 public:
  // Receives the program text, returns the solver's standard output.
  using Runner = std::function<std::string(const std::string& program_text)>;

  explicit ExternalBackend(Runner runner) : runner_(std::move(runner)) {}

  // Writes the program to a temporary file and runs `command <file>`.
  static Runner CommandRunner(std::string command);

  std::string name() const override { return "external"; }
  std::vector<AnswerSet> Solve(const GroundProgram& program, std::size_t count,
                               bool optimize) override;

 private:
  Runner runner_;
};

}  // namespace ospec

#endif  // OSPEC_BACKEND_H_
