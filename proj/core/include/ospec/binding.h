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

#ifndef OSPEC_BINDING_H_
#define OSPEC_BINDING_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ospec/ast.h"
#include "ospec/ground_program.h"
#include "ospec/registry.h"
#include "ospec/value.h"

namespace ospec {

// Runtime value for one specification parameter: an int for `int p`, a list
// of host objects for `Cls[] p`.
using ParamArg = std::variant<std::int64_t, std::vector<HostRef>>;

// Parameter values bound to one specification. Parameter objects receive
// ids p0, p1, ... in first-parameter-then-index order; the same enumeration
// defines the order index, and hence `<` on parameter objects.
struct ObjectUniverse {
  std::map<std::string, std::vector<ObjectId>> param_objects;
  std::map<std::string, std::int64_t> scalar_params;
  std::map<std::pair<ObjectId, std::string>, std::int64_t> method_table;
  std::map<ObjectId, std::size_t> order_index;
  // Host object of parameter object pN at position N.
  std::vector<HostRef> hosts;
  // Array parameter names in declaration order.
  std::vector<std::string> array_order;

  std::size_t object_count() const { return hosts.size(); }
  const HostRef& host(const ObjectId& id) const;
  std::optional<std::int64_t> method_value(const ObjectId& id,
                                           const std::string& method) const;
};

struct ParamMemberFact {
  std::string param;
  std::int64_t index = 0;
  ObjectId object;

  friend bool operator==(const ParamMemberFact&, const ParamMemberFact&) = default;
};

struct MethodValueFact {
  ObjectId object;
  std::string method;
  std::int64_t value = 0;

  friend bool operator==(const MethodValueFact&, const MethodValueFact&) = default;
};

// Parameters as facts: param_member(param, index, obj) and
// method_val(obj, method, value), plus the scalar substitution environment.
struct FactBase {
  std::vector<ParamMemberFact> members;
  std::vector<MethodValueFact> method_values;
  std::map<std::string, std::int64_t> scalars;

  bool empty() const {
    return members.empty() && method_values.empty() && scalars.empty();
  }
  // Reserved-form atoms for display and core-text emission.
  std::vector<GroundAtom> Atoms() const;
  std::string ToString() const;

  friend bool operator==(const FactBase&, const FactBase&) = default;
};

// (array parameter, method) pairs whose values the grounder may need: every
// method-value term whose base variable is a member of that parameter.
std::set<std::pair<std::string, std::string>> RequiredMethodValues(
    const SpecProgram& spec);

// Assigns object ids in order, then precomputes method values by calling
// the registry's accessors eagerly. Throws Error(Stage::kBind).
ObjectUniverse BindParams(const SpecProgram& spec,
                          const std::vector<ParamArg>& args,
                          const ClassRegistry& registry);

FactBase EncodeFacts(const ObjectUniverse& universe);

// Checks that the registry provides every constructor, exe method, and
// accessor the specification can reach. Throws Error(Stage::kBind).
void CheckRegistryCoverage(const SpecProgram& spec,
                           const ClassRegistry& registry);

}  // namespace ospec

#endif  // OSPEC_BINDING_H_
