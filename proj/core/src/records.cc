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

#include "ospec/records.h"

#include <set>
#include <stdexcept>

#include "ospec/binding.h"

namespace ospec {

HostRef MakeRecord(std::string class_name,
                   std::map<std::string, std::int64_t> method_values) {
  auto record = std::make_shared<RecordObject>();
  record->class_name = class_name;
  record->method_values = std::move(method_values);
  return HostRef::Make(std::move(class_name), std::move(record));
}

namespace {

void CollectClasses(const std::vector<Condition>& conditions,
                    std::set<std::string>& classes) {
  for (const Condition& c : conditions) {
    if (const auto* ref = std::get_if<CreationRef>(&c)) classes.insert(ref->class_name);
  }
}

void CollectClasses(const std::vector<CardElement>& elements,
                    std::set<std::string>& classes) {
  for (const CardElement& e : elements) CollectClasses(e.conditions, classes);
}

}  // namespace

ClassRegistry MakeRecordRegistry(const SpecProgram& spec,
                                 std::shared_ptr<CallLog> log) {
  std::set<std::string> classes;
  std::set<std::string> methods;
  for (const ParamDecl& p : spec.params) {
    if (p.is_array()) classes.insert(p.class_name);
  }
  for (const Rule& rule : spec.rules) {
    if (rule.head) {
      if (const auto* n = std::get_if<NewAtom>(&*rule.head)) classes.insert(n->class_name);
      if (const auto* e = std::get_if<ExeAtom>(&*rule.head)) methods.insert(e->method);
      if (const auto* c = std::get_if<Cardinality>(&*rule.head)) {
        CollectClasses(c->elements, classes);
      }
    }
    for (const Literal& lit : rule.body) {
      if (const auto* ref = std::get_if<CreationRef>(&lit.node)) {
        classes.insert(ref->class_name);
      } else if (const auto* c = std::get_if<Cardinality>(&lit.node)) {
        CollectClasses(c->elements, classes);
      } else if (const auto* n = std::get_if<CountAssignment>(&lit.node)) {
        CollectClasses(n->elements, classes);
      }
    }
  }

  ClassRegistry registry;
  for (const std::string& cls : classes) {
    registry.AddConstructor(cls, [cls, log](std::span<const HostValue> args) {
      HostRef ref = MakeRecord(cls);
      ref.As<RecordObject>().constructor_args.assign(args.begin(), args.end());
      if (log) {
        log->entries.push_back(
            CallLog::Entry{true, cls, "", ref, {args.begin(), args.end()}});
      }
      return ref;
    });
    for (const std::string& method : methods) {
      registry.AddMethod(
          cls, method,
          [cls, method, log](const HostRef& target, std::span<const HostValue> args)
              -> std::optional<std::int64_t> {
            target.As<RecordObject>().calls.emplace_back(
                method, std::vector<HostValue>(args.begin(), args.end()));
            if (log) {
              log->entries.push_back(
                  CallLog::Entry{false, cls, method, target, {args.begin(), args.end()}});
            }
            return std::nullopt;
          });
    }
  }
  for (const auto& [param, method] : RequiredMethodValues(spec)) {
    const ParamDecl* decl = spec.FindParam(param);
    if (decl == nullptr) continue;
    registry.AddAccessor(decl->class_name, method, [method](const HostRef& host) {
      const RecordObject& record = host.As<RecordObject>();
      auto it = record.method_values.find(method);
      if (it == record.method_values.end()) {
        throw std::out_of_range("object of class " + record.class_name +
                                " has no value for " + method + "()");
      }
      return it->second;
    });
  }
  return registry;
}

}  // namespace ospec
