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

#include "ospec/validate.h"

#include <algorithm>
#include <array>
#include <set>

namespace ospec {

std::string_view DiagnosticCodeName(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::kUnsafeVariable: return "unsafe-variable";
    case DiagnosticCode::kUnboundVariable: return "unbound-variable";
    case DiagnosticCode::kMethodBase: return "method-base";
    case DiagnosticCode::kInvalidTarget: return "invalid-target";
    case DiagnosticCode::kReservedName: return "reserved-name";
    case DiagnosticCode::kAnonymousTerm: return "anonymous-term";
    case DiagnosticCode::kNestedConstruction: return "nested-construction";
  }
  return "unknown";
}

bool IsReservedPredicate(std::string_view name) {
  static constexpr std::array<std::string_view, 5> kReserved = {
      "param_member", "method_val", "created", "exe", "ret"};
  if (name.starts_with("_") || name.starts_with("ospec_")) return true;
  return std::find(kReserved.begin(), kReserved.end(), name) != kReserved.end();
}

namespace {

using VarSet = std::set<std::string>;

void CollectVars(const Term& t, VarSet& out) {
  switch (t.kind) {
    case Term::Kind::kVariable:
    case Term::Kind::kMethodValue:
      out.insert(t.name);
      break;
    case Term::Kind::kArith:
      for (const Term& o : t.operands) CollectVars(o, out);
      break;
    default:
      break;
  }
}

void CollectVars(const std::vector<Term>& ts, VarSet& out) {
  for (const Term& t : ts) CollectVars(t, out);
}

bool HasAnonymous(const Term& t) {
  if (t.kind == Term::Kind::kAnonymous) return true;
  for (const Term& o : t.operands) {
    if (HasAnonymous(o)) return true;
  }
  return false;
}

void CollectMethodBases(const Term& t, VarSet& out) {
  if (t.kind == Term::Kind::kMethodValue) out.insert(t.name);
  for (const Term& o : t.operands) CollectMethodBases(o, out);
}

void CollectMethodBases(const std::vector<Term>& ts, VarSet& out) {
  for (const Term& t : ts) CollectMethodBases(t, out);
}

void BindPlain(const std::vector<Term>& ts, VarSet& out) {
  for (const Term& t : ts) {
    if (t.is_variable()) out.insert(t.name);
  }
}

void CollectConditionVars(const Condition& c, VarSet& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          CollectVars(n.args, out);
        } else if constexpr (std::is_same_v<T, ParamMembership>) {
          out.insert(n.var);
          CollectVars(n.index, out);
        } else if constexpr (std::is_same_v<T, CreationRef>) {
          out.insert(n.var);
          CollectVars(n.args, out);
        } else {
          CollectVars(n.lhs, out);
          CollectVars(n.rhs, out);
        }
      },
      c);
}

VarSet ElementVars(const CardElement& e) {
  VarSet vars;
  CollectVars(e.atom.args, vars);
  for (const Condition& c : e.conditions) CollectConditionVars(c, vars);
  return vars;
}

class RuleChecker {
 public:
  RuleChecker(const SpecProgram& spec, std::vector<Diagnostic>& out)
      : spec_(spec), out_(out) {}

  void CheckRule(const Rule& rule, int index) {
    index_ = index;
    where_ = rule.where;

    // Variables occurring outside cardinality elements are global.
    VarSet global_vars, head_vars, body_vars;
    VarSet binders, member_bound, object_bound;

    if (rule.head) CollectHeadVars(*rule.head, head_vars);
    for (const Literal& lit : rule.body) {
      CollectLiteralVars(lit, body_vars);
      if (!lit.negated) CollectBinders(lit, binders, member_bound, object_bound);
    }
    global_vars = head_vars;
    global_vars.insert(body_vars.begin(), body_vars.end());

    for (const std::string& v : global_vars) {
      if (binders.contains(v)) continue;
      if (body_vars.contains(v)) {
        Report(DiagnosticCode::kUnsafeVariable, v,
               "variable " + v + "? has no positive binder in the body");
      } else {
        Report(DiagnosticCode::kUnboundVariable, v,
               "variable " + v + "? occurs only in the head");
      }
    }

    // Method-value bases among global terms.
    VarSet bases;
    if (rule.head) CollectHeadMethodBases(*rule.head, bases);
    for (const Literal& lit : rule.body) CollectLiteralMethodBases(lit, bases);
    rule_member_bound_ = member_bound;
    for (const std::string& v : bases) {
      if (!member_bound.contains(v)) {
        Report(DiagnosticCode::kMethodBase, v,
               "method values require " + v +
                   "? to be bound by a parameter membership");
      }
    }

    bool constructs = false;
    if (rule.head) {
      std::visit(
          [&](const auto& h) {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, ExeAtom>) {
              CheckTarget(h.target, object_bound, "exe");
              CheckNoAnonymous(h.args, "exe arguments");
            } else if constexpr (std::is_same_v<T, ReturnAtom>) {
              CheckTarget(h.target, object_bound, "return");
            } else if constexpr (std::is_same_v<T, NewAtom>) {
              constructs = true;
              CheckNoAnonymous(h.args, "constructor arguments");
            } else if constexpr (std::is_same_v<T, Atom>) {
              CheckPredicate(h.predicate);
              CheckNoAnonymous(h.args, "rule heads");
            } else {
              CheckBounds(h);
              for (const CardElement& e : h.elements) {
                CheckElement(e, global_vars, /*template_binds=*/false);
                CheckNoAnonymous(e.atom.args, "choice elements");
              }
            }
          },
          *rule.head);
    }

    for (const Literal& lit : rule.body) {
      CheckLiteral(lit, global_vars);
      if (constructs && std::holds_alternative<CreationRef>(lit.node)) {
        Report(DiagnosticCode::kNestedConstruction, "",
               "constructor calls may not depend on created objects");
      }
    }
  }

  void CheckMinimize(const MinimizeStatement& m) {
    index_ = -1;
    where_ = {};
    rule_member_bound_.clear();
    for (const CardElement& e : m.elements) {
      CheckElement(e, VarSet{}, /*template_binds=*/true);
    }
  }

 private:
  void Report(DiagnosticCode code, const std::string& var, std::string message) {
    out_.push_back(Diagnostic{code, std::move(message), index_, var, where_});
  }

  void CheckPredicate(const std::string& name) {
    if (IsReservedPredicate(name)) {
      Report(DiagnosticCode::kReservedName, "",
             "predicate name '" + name + "' is reserved");
    }
  }

  void CheckNoAnonymous(const std::vector<Term>& ts, std::string_view where) {
    for (const Term& t : ts) CheckNoAnonymous(t, where);
  }

  void CheckNoAnonymous(const Term& t, std::string_view where) {
    if (HasAnonymous(t)) {
      Report(DiagnosticCode::kAnonymousTerm, "",
             "'_' is not allowed in " + std::string(where));
    }
  }

  void CheckNoAnonymousInArith(const Term& t) {
    if (t.kind == Term::Kind::kArith) CheckNoAnonymous(t, "arithmetic");
  }

  void CheckTarget(const std::string& var, const VarSet& object_bound,
                   std::string_view what) {
    if (!object_bound.contains(var)) {
      Report(DiagnosticCode::kInvalidTarget, var,
             std::string(what) + " target " + var +
                 "? must be bound by a creation reference or parameter "
                 "membership");
    }
  }

  void CheckBounds(const Cardinality& c) {
    if (c.lower) CheckNoAnonymous(*c.lower, "cardinality bounds");
    if (c.upper) CheckNoAnonymous(*c.upper, "cardinality bounds");
  }

  void CollectHeadVars(const Head& head, VarSet& out) {
    std::visit(
        [&](const auto& h) {
          using T = std::decay_t<decltype(h)>;
          if constexpr (std::is_same_v<T, Atom>) {
            CollectVars(h.args, out);
          } else if constexpr (std::is_same_v<T, NewAtom>) {
            CollectVars(h.args, out);
          } else if constexpr (std::is_same_v<T, ExeAtom>) {
            out.insert(h.target);
            CollectVars(h.args, out);
          } else if constexpr (std::is_same_v<T, ReturnAtom>) {
            out.insert(h.target);
          } else {
            if (h.lower) CollectVars(*h.lower, out);
            if (h.upper) CollectVars(*h.upper, out);
          }
        },
        head);
  }

  void CollectHeadMethodBases(const Head& head, VarSet& out) {
    std::visit(
        [&](const auto& h) {
          using T = std::decay_t<decltype(h)>;
          if constexpr (std::is_same_v<T, Atom> || std::is_same_v<T, NewAtom> ||
                        std::is_same_v<T, ExeAtom>) {
            CollectMethodBases(h.args, out);
          } else if constexpr (std::is_same_v<T, Cardinality>) {
            if (h.lower) CollectMethodBases(*h.lower, out);
            if (h.upper) CollectMethodBases(*h.upper, out);
          }
        },
        head);
  }

  void CollectLiteralVars(const Literal& lit, VarSet& out) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Atom>) {
            CollectVars(n.args, out);
          } else if constexpr (std::is_same_v<T, ParamMembership>) {
            out.insert(n.var);
            CollectVars(n.index, out);
          } else if constexpr (std::is_same_v<T, CreationRef>) {
            out.insert(n.var);
            CollectVars(n.args, out);
          } else if constexpr (std::is_same_v<T, Comparison>) {
            CollectVars(n.lhs, out);
            CollectVars(n.rhs, out);
          } else if constexpr (std::is_same_v<T, Cardinality>) {
            if (n.lower) CollectVars(*n.lower, out);
            if (n.upper) CollectVars(*n.upper, out);
          } else {
            out.insert(n.var);
          }
        },
        lit.node);
  }

  void CollectLiteralMethodBases(const Literal& lit, VarSet& out) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Atom>) {
            CollectMethodBases(n.args, out);
          } else if constexpr (std::is_same_v<T, ParamMembership>) {
            CollectMethodBases(n.index, out);
          } else if constexpr (std::is_same_v<T, CreationRef>) {
            CollectMethodBases(n.args, out);
          } else if constexpr (std::is_same_v<T, Comparison>) {
            CollectMethodBases(n.lhs, out);
            CollectMethodBases(n.rhs, out);
          } else if constexpr (std::is_same_v<T, Cardinality>) {
            if (n.lower) CollectMethodBases(*n.lower, out);
            if (n.upper) CollectMethodBases(*n.upper, out);
          }
        },
        lit.node);
  }

  static void CollectBinders(const Literal& lit, VarSet& binders,
                             VarSet& member_bound, VarSet& object_bound) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Atom>) {
            BindPlain(n.args, binders);
          } else if constexpr (std::is_same_v<T, ParamMembership>) {
            binders.insert(n.var);
            member_bound.insert(n.var);
            object_bound.insert(n.var);
            if (n.index.is_variable()) binders.insert(n.index.name);
          } else if constexpr (std::is_same_v<T, CreationRef>) {
            binders.insert(n.var);
            object_bound.insert(n.var);
            BindPlain(n.args, binders);
          } else if constexpr (std::is_same_v<T, CountAssignment>) {
            binders.insert(n.var);
          }
        },
        lit.node);
  }

  void CheckLiteral(const Literal& lit, const VarSet& global_vars) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Atom>) {
            CheckPredicate(n.predicate);
            if (lit.negated) {
              CheckNoAnonymous(n.args, "negated atoms");
            } else {
              for (const Term& t : n.args) CheckNoAnonymousInArith(t);
            }
          } else if constexpr (std::is_same_v<T, ParamMembership>) {
            CheckNoAnonymousInArith(n.index);
          } else if constexpr (std::is_same_v<T, CreationRef>) {
            if (lit.negated) {
              CheckNoAnonymous(n.args, "negated creation references");
            } else {
              for (const Term& t : n.args) CheckNoAnonymousInArith(t);
            }
          } else if constexpr (std::is_same_v<T, Comparison>) {
            CheckNoAnonymous(n.lhs, "comparisons");
            CheckNoAnonymous(n.rhs, "comparisons");
          } else if constexpr (std::is_same_v<T, Cardinality>) {
            CheckBounds(n);
            for (const CardElement& e : n.elements) {
              CheckElement(e, global_vars, /*template_binds=*/true);
            }
          } else {
            for (const CardElement& e : n.elements) {
              CheckElement(e, global_vars, /*template_binds=*/true);
            }
          }
        },
        lit.node);
  }

  // Element-local variables must be bound by a positive condition of the
  // element (or by the element atom itself outside choice heads).
  void CheckElement(const CardElement& e, const VarSet& global_vars,
                    bool template_binds) {
    CheckPredicate(e.atom.predicate);
    VarSet local_binders, member_bound;
    if (template_binds) BindPlain(e.atom.args, local_binders);
    for (const Condition& c : e.conditions) {
      std::visit(
          [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Atom>) {
              CheckPredicate(n.predicate);
              BindPlain(n.args, local_binders);
            } else if constexpr (std::is_same_v<T, ParamMembership>) {
              local_binders.insert(n.var);
              member_bound.insert(n.var);
              if (n.index.is_variable()) local_binders.insert(n.index.name);
            } else if constexpr (std::is_same_v<T, CreationRef>) {
              local_binders.insert(n.var);
              BindPlain(n.args, local_binders);
            } else {
              CheckNoAnonymous(n.lhs, "comparisons");
              CheckNoAnonymous(n.rhs, "comparisons");
            }
          },
          c);
    }
    for (const std::string& v : ElementVars(e)) {
      if (global_vars.contains(v) || local_binders.contains(v)) continue;
      Report(DiagnosticCode::kUnsafeVariable, v,
             "variable " + v + "? in element '" + ToString(e.atom) +
                 "' is not bound by a positive condition");
    }
    VarSet bases;
    CollectMethodBases(e.atom.args, bases);
    for (const Condition& c : e.conditions) {
      std::visit(
          [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Atom>) {
              CollectMethodBases(n.args, bases);
            } else if constexpr (std::is_same_v<T, ParamMembership>) {
              CollectMethodBases(n.index, bases);
            } else if constexpr (std::is_same_v<T, CreationRef>) {
              CollectMethodBases(n.args, bases);
            } else {
              CollectMethodBases(n.lhs, bases);
              CollectMethodBases(n.rhs, bases);
            }
          },
          c);
    }
    for (const std::string& v : bases) {
      if (member_bound.contains(v)) continue;
      if (global_vars.contains(v) && rule_member_bound_.contains(v)) continue;
      Report(DiagnosticCode::kMethodBase, v,
             "method values require " + v +
                 "? to be bound by a parameter membership");
    }
  }

  const SpecProgram& spec_;
  std::vector<Diagnostic>& out_;
  int index_ = 0;
  SourceLocation where_;
  VarSet rule_member_bound_;
};

}  // namespace

std::vector<Diagnostic> Validate(const SpecProgram& spec) {
  std::vector<Diagnostic> out;
  RuleChecker checker(spec, out);
  for (std::size_t i = 0; i < spec.rules.size(); ++i) {
    checker.CheckRule(spec.rules[i], static_cast<int>(i));
  }
  if (spec.minimize) checker.CheckMinimize(*spec.minimize);
  return out;
}

void ValidateOrThrow(const SpecProgram& spec) {
  std::vector<Diagnostic> diags = Validate(spec);
  if (diags.empty()) return;
  const Diagnostic& d = diags.front();
  std::string message = std::string(DiagnosticCodeName(d.code)) + ": " + d.message;
  if (diags.size() > 1) {
    message += " (and " + std::to_string(diags.size() - 1) + " more)";
  }
  throw Error(Stage::kValidate, message, d.where);
}

}  // namespace ospec
