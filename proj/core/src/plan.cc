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

#include "ospec/plan.h"

#include <algorithm>
#include <set>

#include "ospec/error.h"

namespace ospec {

std::string ToString(const Creation& c) {
  return "new " + c.class_name + "(" + JoinValues(c.args) + ") as " +
         c.id.ToString();
}

std::string ToString(const Invocation& i) {
  std::string out = "exe";
  if (i.stage != 0) out += "[" + std::to_string(i.stage) + "]";
  return out + " " + i.target.ToString() + "." + i.method + "(" +
         JoinValues(i.args) + ")";
}

namespace {

std::string Render(const AnswerSet& answer_set, const GroundProgram& program) {
  std::string out = "{";
  for (std::size_t i = 0; i < answer_set.atoms.size(); ++i) {
    if (i > 0) out += ", ";
    out += program.atom(answer_set.atoms[i]).ToString();
  }
  return out + "}";
}

}  // namespace

ConstructionPlan ExtractPlan(const AnswerSet& answer_set,
                             const GroundProgram& program) {
  ConstructionPlan plan;
  std::vector<ObjectId> returns;
  for (AtomId id : answer_set.atoms) {
    const GroundAtom& a = program.atom(id);
    switch (a.kind) {
      case GroundAtom::Kind::kNew:
        plan.creations.push_back(Creation{a.CreatedObject(), a.name, a.args});
        break;
      case GroundAtom::Kind::kExe:
        plan.invocations.push_back(
            Invocation{a.stage, a.target.as_object(), a.name, a.args});
        break;
      case GroundAtom::Kind::kReturn:
        returns.push_back(a.target.as_object());
        break;
      default:
        break;
    }
  }
  if (returns.empty()) {
    throw Error(Stage::kExtract,
                "no return derived in answer set " + Render(answer_set, program));
  }
  if (returns.size() > 1) {
    std::sort(returns.begin(), returns.end());
    std::string which;
    for (const ObjectId& r : returns) which += (which.empty() ? "" : ", ") + r.ToString();
    throw Error(Stage::kExtract, "ambiguous return (" + which + ") in answer set " +
                                     Render(answer_set, program));
  }
  plan.returns = returns.front();

  std::sort(plan.creations.begin(), plan.creations.end(),
            [](const Creation& a, const Creation& b) { return a.id < b.id; });
  std::sort(plan.invocations.begin(), plan.invocations.end(),
            [](const Invocation& a, const Invocation& b) {
              if (a.stage != b.stage) return a.stage < b.stage;
              if (a.target != b.target) return a.target < b.target;
              if (a.method != b.method) return a.method < b.method;
              return CompareTuples(a.args, b.args) < 0;
            });

  std::set<ObjectId> created;
  for (const Creation& c : plan.creations) created.insert(c.id);
  auto check = [&](const ObjectId& id, const std::string& where) {
    if (id.is_created() && !created.contains(id)) {
      throw Error(Stage::kExtract, where + " refers to " + id.ToString() +
                                       ", which the answer set does not create");
    }
  };
  auto check_args = [&](const std::vector<Value>& args, const std::string& where) {
    for (const Value& v : args) {
      if (v.is_object()) check(v.as_object(), where);
    }
  };
  for (const Creation& c : plan.creations) check_args(c.args, ToString(c));
  for (const Invocation& i : plan.invocations) {
    check(i.target, ToString(i));
    check_args(i.args, ToString(i));
  }
  check(plan.returns, "return");
  return plan;
}

namespace {

class Executor {
 public:
  Executor(const ClassRegistry& registry, const ObjectUniverse& universe)
      : registry_(registry), universe_(universe) {}

  Solution Run(const ConstructionPlan& plan) {
    Solution out;
    out.plan = plan;
    for (std::size_t i = 0; i < plan.creations.size(); ++i) {
      const Creation& c = plan.creations[i];
      const std::string where = "creation #" + std::to_string(i) + " (" + ToString(c) + ")";
      const ClassRegistry::Constructor* ctor = registry_.FindConstructor(c.class_name);
      if (ctor == nullptr) {
        throw Error(Stage::kExecute, where + ": registry has no constructor for class " +
                                         c.class_name);
      }
      std::vector<HostValue> args = Resolve(c.args, where);
      HostRef made;
      try {
        made = (*ctor)(args);
      } catch (const std::exception& e) {
        throw Error(Stage::kExecute, where + " failed: " + e.what());
      }
      if (made.empty()) throw Error(Stage::kExecute, where + " returned no object");
      objects_[c.id] = made;
    }
    for (std::size_t i = 0; i < plan.invocations.size(); ++i) {
      const Invocation& inv = plan.invocations[i];
      const std::string where =
          "invocation #" + std::to_string(i) + " (" + ToString(inv) + ")";
      HostRef target = Lookup(inv.target, where);
      const std::string class_name =
          inv.target.is_created() ? inv.target.skolem().class_name : target.class_name();
      const ClassRegistry::Method* method = registry_.FindMethod(class_name, inv.method);
      if (method == nullptr) {
        throw Error(Stage::kExecute, where + ": registry has no method " + class_name +
                                         "." + inv.method + "()");
      }
      std::vector<HostValue> args = Resolve(inv.args, where);
      try {
        (*method)(target, args);
      } catch (const std::exception& e) {
        throw Error(Stage::kExecute, where + " failed: " + e.what());
      }
    }
    out.root = Lookup(plan.returns, "return");
    out.objects = std::move(objects_);
    return out;
  }

 private:
  HostRef Lookup(const ObjectId& id, const std::string& where) {
    if (id.is_param()) {
      if (id.param_index() < 0 ||
          static_cast<std::size_t>(id.param_index()) >= universe_.hosts.size()) {
        throw Error(Stage::kExecute, where + ": unknown parameter object " + id.ToString());
      }
      HostRef host = universe_.host(id);
      objects_.try_emplace(id, host);
      return host;
    }
    auto it = objects_.find(id);
    if (it == objects_.end()) {
      throw Error(Stage::kExecute, where + ": object " + id.ToString() +
                                       " has not been created");
    }
    return it->second;
  }

  std::vector<HostValue> Resolve(const std::vector<Value>& values,
                                 const std::string& where) {
    std::vector<HostValue> out;
    out.reserve(values.size());
    for (const Value& v : values) {
      switch (v.kind()) {
        case Value::Kind::kInt: out.emplace_back(v.as_int()); break;
        case Value::Kind::kSymbol: out.emplace_back(v.as_symbol()); break;
        case Value::Kind::kObject: out.emplace_back(Lookup(v.as_object(), where)); break;
      }
    }
    return out;
  }

  const ClassRegistry& registry_;
  const ObjectUniverse& universe_;
  std::map<ObjectId, HostRef> objects_;
};

}  // namespace

Solution ExecutePlan(const ConstructionPlan& plan, const ClassRegistry& registry,
                     const ObjectUniverse& universe) {
  return Executor(registry, universe).Run(plan);
}

}  // namespace ospec
