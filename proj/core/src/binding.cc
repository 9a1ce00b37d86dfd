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

#include "ospec/binding.h"

#include <sstream>

#include "ospec/error.h"

namespace ospec {

const HostRef& ObjectUniverse::host(const ObjectId& id) const {
  if (!id.is_param() || id.param_index() < 0 ||
      static_cast<std::size_t>(id.param_index()) >= hosts.size()) {
    throw Error(Stage::kExecute, "no host object for " + id.ToString());
  }
  return hosts[static_cast<std::size_t>(id.param_index())];
}

std::optional<std::int64_t> ObjectUniverse::method_value(
    const ObjectId& id, const std::string& method) const {
  auto it = method_table.find({id, method});
  if (it == method_table.end()) return std::nullopt;
  return it->second;
}

std::vector<GroundAtom> FactBase::Atoms() const {
  std::vector<GroundAtom> out;
  for (const ParamMemberFact& m : members) {
    out.push_back(GroundAtom::ParamMember(m.param, m.index, m.object));
  }
  for (const MethodValueFact& f : method_values) {
    out.push_back(GroundAtom::Ordinary(
        "method_val", {Value::Object(f.object), Value::Sym(f.method),
                       Value::Int(f.value)}));
  }
  return out;
}

std::string FactBase::ToString() const {
  std::ostringstream out;
  for (const GroundAtom& a : Atoms()) out << a.ToString() << ".\n";
  for (const auto& [name, value] : scalars) {
    out << "% " << name << " = " << value << "\n";
  }
  return out.str();
}

namespace {

using MemberMap = std::map<std::string, std::set<std::string>>;

void AddMembership(const ParamMembership& m, MemberMap& members) {
  members[m.var].insert(m.param);
}

template <class F>
void ForEachTerm(const Term& t, F&& f) {
  f(t);
  for (const Term& o : t.operands) ForEachTerm(o, f);
}

template <class F>
void ForEachTerm(const std::vector<Term>& ts, F&& f) {
  for (const Term& t : ts) ForEachTerm(t, f);
}

template <class F>
void ForEachConditionTerm(const Condition& c, F&& f) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          ForEachTerm(n.args, f);
        } else if constexpr (std::is_same_v<T, ParamMembership>) {
          ForEachTerm(n.index, f);
        } else if constexpr (std::is_same_v<T, CreationRef>) {
          ForEachTerm(n.args, f);
        } else {
          ForEachTerm(n.lhs, f);
          ForEachTerm(n.rhs, f);
        }
      },
      c);
}

class MethodScan {
 public:
  explicit MethodScan(const SpecProgram& spec) : spec_(spec) {}

  std::set<std::pair<std::string, std::string>> Run() {
    for (const Rule& rule : spec_.rules) ScanRule(rule);
    if (spec_.minimize) {
      for (const CardElement& e : spec_.minimize->elements) ScanElement(e, {});
    }
    return std::move(out_);
  }

 private:
  void Need(const Term& t, const MemberMap& members) {
    if (t.kind != Term::Kind::kMethodValue) return;
    auto it = members.find(t.name);
    if (it == members.end()) return;
    for (const std::string& param : it->second) out_.insert({param, t.method});
  }

  void ScanElement(const CardElement& e, const MemberMap& outer) {
    MemberMap members = outer;
    for (const Condition& c : e.conditions) {
      if (const auto* m = std::get_if<ParamMembership>(&c)) AddMembership(*m, members);
    }
    auto need = [&](const Term& t) { Need(t, members); };
    ForEachTerm(e.atom.args, need);
    for (const Condition& c : e.conditions) ForEachConditionTerm(c, need);
  }

  void ScanRule(const Rule& rule) {
    MemberMap members;
    for (const Literal& lit : rule.body) {
      if (lit.negated) continue;
      if (const auto* m = std::get_if<ParamMembership>(&lit.node)) {
        AddMembership(*m, members);
      }
    }
    auto need = [&](const Term& t) { Need(t, members); };
    auto scan_card = [&](const Cardinality& c) {
      if (c.lower) ForEachTerm(*c.lower, need);
      if (c.upper) ForEachTerm(*c.upper, need);
      for (const CardElement& e : c.elements) ScanElement(e, members);
    };
    if (rule.head) {
      std::visit(
          [&](const auto& h) {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, Atom> || std::is_same_v<T, NewAtom> ||
                          std::is_same_v<T, ExeAtom>) {
              ForEachTerm(h.args, need);
            } else if constexpr (std::is_same_v<T, Cardinality>) {
              scan_card(h);
            }
          },
          *rule.head);
    }
    for (const Literal& lit : rule.body) {
      std::visit(
          [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Cardinality>) {
              scan_card(n);
            } else if constexpr (std::is_same_v<T, CountAssignment>) {
              for (const CardElement& e : n.elements) ScanElement(e, members);
            } else {
              ForEachConditionTerm(Condition(n), need);
            }
          },
          lit.node);
    }
  }

  const SpecProgram& spec_;
  std::set<std::pair<std::string, std::string>> out_;
};

}  // namespace

std::set<std::pair<std::string, std::string>> RequiredMethodValues(
    const SpecProgram& spec) {
  return MethodScan(spec).Run();
}

ObjectUniverse BindParams(const SpecProgram& spec,
                          const std::vector<ParamArg>& args,
                          const ClassRegistry& registry) {
  if (args.size() != spec.params.size()) {
    throw Error(Stage::kBind, "specification " + spec.name + " expects " +
                                  std::to_string(spec.params.size()) +
                                  " arguments, got " +
                                  std::to_string(args.size()));
  }
  ObjectUniverse u;
  std::int64_t next = 0;
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    const ParamDecl& p = spec.params[i];
    if (p.is_array()) {
      const auto* objects = std::get_if<std::vector<HostRef>>(&args[i]);
      if (objects == nullptr) {
        throw Error(Stage::kBind, "argument '" + p.name + "' must be an array of " +
                                      p.class_name);
      }
      std::vector<ObjectId>& ids = u.param_objects[p.name];
      for (const HostRef& host : *objects) {
        ObjectId id = ObjectId::Param(next++);
        u.order_index[id] = u.hosts.size();
        u.hosts.push_back(host);
        ids.push_back(id);
      }
      u.array_order.push_back(p.name);
    } else {
      const auto* value = std::get_if<std::int64_t>(&args[i]);
      if (value == nullptr) {
        throw Error(Stage::kBind, "argument '" + p.name + "' must be an int");
      }
      u.scalar_params[p.name] = *value;
    }
  }

  for (const auto& [param, method] : RequiredMethodValues(spec)) {
    const ParamDecl* decl = spec.FindParam(param);
    const ClassRegistry::Accessor* accessor =
        registry.FindAccessor(decl->class_name, method);
    if (accessor == nullptr) {
      throw Error(Stage::kBind, "missing accessor " + decl->class_name + "." +
                                    method + "() for parameter " + param);
    }
    const std::vector<ObjectId>& ids = u.param_objects[param];
    for (std::size_t i = 0; i < ids.size(); ++i) {
      try {
        u.method_table[{ids[i], method}] = (*accessor)(u.host(ids[i]));
      } catch (const Error&) {
        throw;
      } catch (const std::exception& e) {
        throw Error(Stage::kBind, "accessor " + decl->class_name + "." + method +
                                      "() failed on " + ids[i].ToString() +
                                      " (" + param + "[" + std::to_string(i) +
                                      "]): " + e.what());
      }
    }
  }
  return u;
}

FactBase EncodeFacts(const ObjectUniverse& universe) {
  FactBase facts;
  for (const std::string& param : universe.array_order) {
    const std::vector<ObjectId>& ids = universe.param_objects.at(param);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      facts.members.push_back(
          ParamMemberFact{param, static_cast<std::int64_t>(i), ids[i]});
    }
  }
  for (const auto& [key, value] : universe.method_table) {
    facts.method_values.push_back(MethodValueFact{key.first, key.second, value});
  }
  facts.scalars = universe.scalar_params;
  return facts;
}

void CheckRegistryCoverage(const SpecProgram& spec,
                           const ClassRegistry& registry) {
  auto need_ctor = [&](const std::string& cls) {
    if (registry.FindConstructor(cls) == nullptr) {
      throw Error(Stage::kBind, "registry has no constructor for class " + cls);
    }
  };
  auto scan_condition = [&](const Condition& c) {
    if (const auto* ref = std::get_if<CreationRef>(&c)) need_ctor(ref->class_name);
  };
  for (const Rule& rule : spec.rules) {
    std::map<std::string, std::string> var_class;
    for (const Literal& lit : rule.body) {
      std::visit(
          [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, CreationRef>) {
              need_ctor(n.class_name);
              if (!lit.negated) var_class.try_emplace(n.var, n.class_name);
            } else if constexpr (std::is_same_v<T, ParamMembership>) {
              if (!lit.negated) {
                var_class.try_emplace(n.var, spec.FindParam(n.param)->class_name);
              }
            } else if constexpr (std::is_same_v<T, Cardinality>) {
              for (const CardElement& e : n.elements) {
                for (const Condition& c : e.conditions) scan_condition(c);
              }
            } else if constexpr (std::is_same_v<T, CountAssignment>) {
              for (const CardElement& e : n.elements) {
                for (const Condition& c : e.conditions) scan_condition(c);
              }
            }
          },
          lit.node);
    }
    if (!rule.head) continue;
    if (const auto* n = std::get_if<NewAtom>(&*rule.head)) need_ctor(n->class_name);
    if (const auto* e = std::get_if<ExeAtom>(&*rule.head)) {
      auto it = var_class.find(e->target);
      if (it == var_class.end()) continue;  // reported by validation
      if (registry.FindMethod(it->second, e->method) == nullptr) {
        throw Error(Stage::kBind, "registry has no method " + it->second + "." +
                                      e->method + "()");
      }
    }
    if (const auto* c = std::get_if<Cardinality>(&*rule.head)) {
      for (const CardElement& e : c->elements) {
        for (const Condition& cond : e.conditions) scan_condition(cond);
      }
    }
  }
}

}  // namespace ospec
