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

#ifndef OSPEC_VALIDATE_H_
#define OSPEC_VALIDATE_H_

#include <string>
#include <string_view>
#include <vector>

#include "ospec/ast.h"

namespace ospec {

enum class DiagnosticCode {
  kUnsafeVariable,      // occurs in the rule but has no positive binder
  kUnboundVariable,     // occurs only in the head
  kMethodBase,          // method value on a variable not bound by membership
  kInvalidTarget,       // exe/return target not an object-binding variable
  kReservedName,        // predicate name reserved for internal atoms
  kAnonymousTerm,       // "_" in a position where it cannot be grounded
  kNestedConstruction,  // constructor call that depends on created objects
};

std::string_view DiagnosticCodeName(DiagnosticCode code);

struct Diagnostic {
  DiagnosticCode code;
  std::string message;
  // Index into SpecProgram::rules; -1 for the minimize statement.
  int rule_index = -1;
  std::string variable;
  SourceLocation where;
};

// Safety and well-formedness checks. An empty result means the program can
// be grounded to a finite variable-free program.
std::vector<Diagnostic> Validate(const SpecProgram& spec);

// Throws Error(Stage::kValidate) carrying the first diagnostic, if any.
void ValidateOrThrow(const SpecProgram& spec);

// Predicate names used by the grounder and the core-text renderer.
bool IsReservedPredicate(std::string_view name);

}  // namespace ospec

#endif  // OSPEC_VALIDATE_H_
