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

#include "ospec/ast.h"

#include <sstream>

namespace ospec {

Term Term::Int(std::int64_t v) {
  Term t;
  t.kind = Kind::kInt;
  t.number = v;
  return t;
}

Term Term::Sym(std::string name) {
  Term t;
  t.kind = Kind::kSymbol;
  t.name = std::move(name);
  return t;
}

Term Term::Var(std::string name) {
  Term t;
  t.kind = Kind::kVariable;
  t.name = std::move(name);
  return t;
}

Term Term::Anonymous() {
  Term t;
  t.kind = Kind::kAnonymous;
  return t;
}

Term Term::ParamScalar(std::string name) {
  Term t;
  t.kind = Kind::kParamScalar;
  t.name = std::move(name);
  return t;
}

Term Term::MethodValue(std::string var, std::string method) {
  Term t;
  t.kind = Kind::kMethodValue;
  t.name = std::move(var);
  t.method = std::move(method);
  return t;
}

Term Term::Arith(Term lhs, char op, Term rhs) {
  Term t;
  t.kind = Kind::kArith;
  t.op = op;
  t.operands.push_back(std::move(lhs));
  t.operands.push_back(std::move(rhs));
  return t;
}

const ParamDecl* SpecProgram::FindParam(const std::string& param_name) const {
  for (const ParamDecl& p : params) {
    if (p.name == param_name) return &p;
  }
  return nullptr;
}

std::string_view CompareOpText(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "==";
    case CompareOp::kNe: return "!=";
    case CompareOp::kLt: return "<";
    case CompareOp::kGt: return ">";
    case CompareOp::kLe: return "<=";
    case CompareOp::kGe: return ">=";
  }
  return "?";
}

namespace {

template <class T, class F>
std::string Join(const std::vector<T>& items, std::string_view sep, F&& f) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += f(items[i]);
  }
  return out;
}

std::string Args(const std::vector<Term>& args) {
  return Join(args, ",", [](const Term& t) { return ToString(t); });
}

std::string Elements(const std::vector<CardElement>& elements) {
  return Join(elements, ", ",
              [](const CardElement& e) { return ToString(e); });
}

std::string ToString(const Cardinality& card) {
  std::string out;
  if (card.lower) out += ToString(*card.lower) + " ";
  out += "{" + Elements(card.elements) + "}";
  if (card.upper) out += " " + ToString(*card.upper);
  return out;
}

std::string ToString(const ParamMembership& m) {
  return m.var + "?" + m.param + "(" + ToString(m.index) + ")";
}

std::string ToString(const CreationRef& c) {
  return c.var + "?" + c.class_name + "(" + Args(c.args) + ")";
}

std::string ToString(const Comparison& c) {
  return ToString(c.lhs) + " " + std::string(CompareOpText(c.op)) + " " +
         ToString(c.rhs);
}

}  // namespace

std::string ToString(const Term& term) {
  switch (term.kind) {
    case Term::Kind::kInt: return std::to_string(term.number);
    case Term::Kind::kSymbol: return term.name;
    case Term::Kind::kVariable: return term.name + "?";
    case Term::Kind::kAnonymous: return "_";
    case Term::Kind::kParamScalar: return term.name;
    case Term::Kind::kMethodValue: return term.name + "?." + term.method + "()";
    case Term::Kind::kArith: {
      const Term& rhs = term.operands[1];
      std::string right = ToString(rhs);
      if (rhs.kind == Term::Kind::kArith ||
          (rhs.kind == Term::Kind::kInt && rhs.number < 0)) {
        right = "(" + right + ")";
      }
      return ToString(term.operands[0]) + term.op + right;
    }
  }
  return {};
}

std::string ToString(const Atom& atom) {
  if (atom.args.empty()) return atom.predicate;
  return atom.predicate + "(" + Args(atom.args) + ")";
}

std::string ToString(const Condition& condition) {
  return std::visit([](const auto& c) { return ToString(c); }, condition);
}

std::string ToString(const CardElement& element) {
  std::string out = ToString(element.atom);
  for (const Condition& c : element.conditions) out += " : " + ToString(c);
  return out;
}

std::string ToString(const Literal& literal) {
  std::string body = std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CountAssignment>) {
          return node.var + "? = {" + Elements(node.elements) + "}";
        } else {
          return ToString(node);
        }
      },
      literal.node);
  return literal.negated ? "not " + body : body;
}

std::string ToString(const Head& head) {
  return std::visit(
      [](const auto& h) -> std::string {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, NewAtom>) {
          return "new " + h.class_name + "(" + Args(h.args) + ")";
        } else if constexpr (std::is_same_v<T, ExeAtom>) {
          std::string out = "exe";
          if (h.stage != 0) out += "[" + std::to_string(h.stage) + "]";
          return out + " " + h.target + "?." + h.method + "(" + Args(h.args) +
                 ")";
        } else if constexpr (std::is_same_v<T, ReturnAtom>) {
          return "return " + h.target + "?";
        } else {
          return ToString(h);
        }
      },
      head);
}

std::string ToString(const Rule& rule) {
  std::string out;
  if (rule.head) out += ToString(*rule.head);
  if (!rule.body.empty()) {
    out += rule.head ? " :- " : ":- ";
    out += Join(rule.body, ", ", [](const Literal& l) { return ToString(l); });
  }
  return out + ".";
}

std::string ToSource(const SpecProgram& spec) {
  std::ostringstream out;
  if (spec.package_name) out << "package " << *spec.package_name << ";\n";
  for (const std::string& imp : spec.imports) out << "import " << imp << ";\n";
  out << spec.name << "(";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    const ParamDecl& p = spec.params[i];
    if (i > 0) out << ", ";
    if (p.is_array()) {
      out << p.class_name << "[] " << p.name;
    } else {
      out << "int " << p.name;
    }
  }
  out << ") {\n";
  for (const Rule& r : spec.rules) out << "  " << ToString(r) << "\n";
  if (spec.minimize) {
    out << "  #minimize{" << Elements(spec.minimize->elements) << "}.\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ospec
