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

#ifndef OSPEC_DOCUMENTS_H_
#define OSPEC_DOCUMENTS_H_

#include <string>
#include <string_view>
#include <vector>

#include "ospec/ast.h"
#include "ospec/binding.h"
#include "ospec/plan.h"
#include "ospec/records.h"

namespace ospec {

// Universe document (JSON): one member per specification parameter.
//
//   {"comps": [{"class": "Component",
//               "methods": {"getNrSock": 3, "getType": 1}}, ...],
//    "nrCables": 9}
//
// Array parameters become RecordObject hosts. Throws
// Error(Stage::kDocument) on malformed input or when a parameter is
// missing, unknown or tagged with the wrong class.
std::vector<ParamArg> ReadUniverse(std::string_view json_text,
                                   const SpecProgram& spec);

// One executed solution together with the calls its execution logged.
struct PlanReport {
  Solution solution;
  std::vector<CallLog::Entry> log;
};

// Result document (JSON):
//   {"result": "SATISFIABLE" | "UNSATISFIABLE",
//    "solutions": [{"parameters", "creations", "invocations", "return",
//                   "objects", "log"}, ...]}
// Field order is fixed and object ids are rendered symbolically, so equal
// inputs give byte-identical output.
std::string RenderResult(const std::vector<PlanReport>& reports,
                         const ObjectUniverse& universe);

}  // namespace ospec

#endif  // OSPEC_DOCUMENTS_H_
