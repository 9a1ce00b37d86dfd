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

#ifndef OSPEC_SOLVER_H_
#define OSPEC_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ospec/ground_program.h"

namespace ospec {

struct AnswerSet {
  // Sorted ascending.
  std::vector<AtomId> atoms;
  // Number of true minimize atoms; 0 without a minimize statement.
  std::int64_t cost = 0;

  bool Contains(AtomId id) const;
  friend bool operator==(const AnswerSet&, const AnswerSet&) = default;
};

struct SolveRequest {
  const GroundProgram& program;
  // Maximum number of models; 0 means all.
  std::size_t count = 0;
  bool optimize = false;
  // Search trace, one line per decision and conflict, when non-null.
  std::ostream* trace = nullptr;
};

// Truth of `lower { literals } upper` under a dense truth vector.
bool EvaluateCardinality(const GroundCardinality& card,
                         const std::vector<bool>& truth);

// Number of true minimize atoms.
std::int64_t Cost(const GroundProgram& program, const std::vector<bool>& truth);

// Direct check of the stable-model definition: the candidate must satisfy
// every rule, and equal the least model of its reduct.
bool IsStableModel(const GroundProgram& program, const std::vector<AtomId>& candidate);
bool IsStableModel(const GroundProgram& program, const std::vector<bool>& truth);

inline constexpr std::size_t kBruteForceCap = 22;

// Every stable model, found by testing all subsets of the atoms. Throws
// std::length_error when the program has more than `cap` atoms.
std::vector<AnswerSet> BruteForceModels(const GroundProgram& program,
                                        std::size_t cap = kBruteForceCap);

// Stable models in lexicographic order of their atom-id bitvectors (atom 0
// is the most significant position; false sorts before true). With
// `optimize`, only models of minimal cost are returned.
std::vector<AnswerSet> Enumerate(const SolveRequest& request);

// Orders answer sets as Enumerate emits them.
bool BitvectorLess(const AnswerSet& a, const AnswerSet& b);

}  // namespace ospec

#endif  // OSPEC_SOLVER_H_
