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

#ifndef OSPEC_CORE_TEXT_H_
#define OSPEC_CORE_TEXT_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ospec/ground_program.h"

namespace ospec {

// A ground program in the text syntax of mainstream ASP solvers.
//
// Reserved atom forms:
//   created("Class",args...)           constructor atom
//   exe(stage,target,"method",args...) invocation atom
//   ret(obj)                           return atom
//   param_member("param",index,obj)    membership fact
// Parameter object pN renders as obj(N); a created object renders as
// new("Class",args...). Predicates that are not plain lowercase identifiers
// are prefixed with "ospec_".
struct CoreText {
  std::string program;
  // Rendered atom name -> atom id, one entry per program atom.
  std::map<std::string, AtomId, std::less<>> atom_ids;

  // "name <TAB> internal form" lines in atom-id order.
  std::string MappingTable(const GroundProgram& program) const;
};

struct CoreTextOptions {
  bool include_minimize = true;
};

std::string CoreAtomName(const GroundAtom& atom);

CoreText EmitCoreText(const GroundProgram& program, CoreTextOptions options = {});

// Reads "Answer: k" blocks, each followed by one line of atoms, up to the
// verdict line. Unknown atoms and malformed blocks throw
// Error(Stage::kBackend). An UNSATISFIABLE verdict yields no models.
std::vector<std::vector<AtomId>> ParseSolverOutput(std::string_view text,
                                                   const CoreText& table);

}  // namespace ospec

#endif  // OSPEC_CORE_TEXT_H_
