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

#ifndef OSPEC_ERROR_H_
#define OSPEC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ospec {

// Pipeline stage that raised an error. Every error surfaced by the library
// names its stage so callers (and the CLI) can report it.
enum class Stage {
  kLex,
  kParse,
  kValidate,
  kBind,
  kGround,
  kSolve,
  kExtract,
  kExecute,
  kBackend,
  kDocument,
};

std::string_view StageName(Stage stage);

struct SourceLocation {
  int line = 0;
  int column = 0;

  bool valid() const { return line > 0; }
  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

class Error : public std::runtime_error {
 public:
  Error(Stage stage, std::string message, SourceLocation where = {});

  Stage stage() const { return stage_; }
  const SourceLocation& where() const { return where_; }
  // Message without the stage/location prefix.
  const std::string& detail() const { return detail_; }

 private:
  Stage stage_;
  SourceLocation where_;
  std::string detail_;
};

}  // namespace ospec

#endif  // OSPEC_ERROR_H_
