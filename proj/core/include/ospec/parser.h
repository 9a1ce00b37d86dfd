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

#ifndef OSPEC_PARSER_H_
#define OSPEC_PARSER_H_

#include <string_view>

#include "ospec/ast.h"

namespace ospec {

// Parses a complete `.ospec` source:
//
//   package a.b;                      (optional)
//   import a.b.*;  import a.b.C;      (zero or more)
//   Name(int n, Cls[] xs) { rules }
//
// `V?name(...)` parses as parameter membership when `name` is a declared
// array parameter and as a creation reference otherwise. Throws
// Error(Stage::kLex) or Error(Stage::kParse) with a source location.
SpecProgram ParseSpec(std::string_view source);

}  // namespace ospec

#endif  // OSPEC_PARSER_H_
