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

#include "ospec/error.h"

#include <sstream>

namespace ospec {

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kLex: return "lex";
    case Stage::kParse: return "parse";
    case Stage::kValidate: return "validate";
    case Stage::kBind: return "bind";
    case Stage::kGround: return "ground";
    case Stage::kSolve: return "solve";
    case Stage::kExtract: return "extract";
    case Stage::kExecute: return "execute";
    case Stage::kBackend: return "backend";
    case Stage::kDocument: return "document";
  }
  return "unknown";
}

namespace {

std::string Format(Stage stage, const std::string& message,
                   const SourceLocation& where) {
  std::ostringstream out;
  out << StageName(stage) << " error";
  if (where.valid()) out << " at " << where.line << ":" << where.column;
  out << ": " << message;
  return out.str();
}

}  // namespace

Error::Error(Stage stage, std::string message, SourceLocation where)
    : std::runtime_error(Format(stage, message, where)),
      stage_(stage),
      where_(where),
      detail_(std::move(message)) {}

}  // namespace ospec
