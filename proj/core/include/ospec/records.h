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

#ifndef OSPEC_RECORDS_H_
#define OSPEC_RECORDS_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ospec/ast.h"
#include "ospec/registry.h"

namespace ospec {

// Generic host object for data-driven universes: a class tag with
// precomputed method values, plus whatever the plan does to it.
struct RecordObject {
  std::string class_name;
  std::map<std::string, std::int64_t> method_values;
  std::vector<HostValue> constructor_args;
  // Invocations received, in execution order.
  std::vector<std::pair<std::string, std::vector<HostValue>>> calls;
};

HostRef MakeRecord(std::string class_name,
                   std::map<std::string, std::int64_t> method_values = {});

// Every constructor and method call made through a record registry.
struct CallLog {
  struct Entry {
    bool is_construction = false;
    std::string class_name;
    std::string method;  // empty for constructions
    HostRef object;      // created object or invocation target
    std::vector<HostValue> args;
  };
  std::vector<Entry> entries;
};

// Registry over RecordObject hosts covering the classes, methods and
// accessors `spec` mentions. Constructors and methods append to `log`.
ClassRegistry MakeRecordRegistry(const SpecProgram& spec,
                                 std::shared_ptr<CallLog> log);

}  // namespace ospec

#endif  // OSPEC_RECORDS_H_
