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

#ifndef OSPEC_PLAN_H_
#define OSPEC_PLAN_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ospec/binding.h"
#include "ospec/ground_program.h"
#include "ospec/registry.h"
#include "ospec/solver.h"
#include "ospec/value.h"

namespace ospec {

struct Creation {
  ObjectId id;
  std::string class_name;
  std::vector<Value> args;

  friend bool operator==(const Creation&, const Creation&) = default;
};

struct Invocation {
  std::int64_t stage = 0;
  ObjectId target;
  std::string method;
  std::vector<Value> args;

  friend bool operator==(const Invocation&, const Invocation&) = default;
};

// Creations in skolem-id order; invocations by (stage, target, method,
// args); exactly one returned object.
struct ConstructionPlan {
  std::vector<Creation> creations;
  std::vector<Invocation> invocations;
  ObjectId returns;

  friend bool operator==(const ConstructionPlan&, const ConstructionPlan&) = default;
};

std::string ToString(const Creation& c);
std::string ToString(const Invocation& i);

// Reads the constructor, exe and return atoms of one answer set. Throws
// Error(Stage::kExtract) unless exactly one return atom is true, or when an
// object id refers to an object the plan never creates.
ConstructionPlan ExtractPlan(const AnswerSet& answer_set,
                             const GroundProgram& program);

struct Solution {
  ConstructionPlan plan;
  HostRef root;
  // Host object of every parameter and created object the plan touched.
  std::map<ObjectId, HostRef> objects;
};

// Runs all constructors in plan order, then all invocations. Object ids in
// arguments resolve to parameter hosts or earlier creations. Throws
// Error(Stage::kExecute) naming the plan position on any failure.
Solution ExecutePlan(const ConstructionPlan& plan, const ClassRegistry& registry,
                     const ObjectUniverse& universe);

}  // namespace ospec

#endif  // OSPEC_PLAN_H_
