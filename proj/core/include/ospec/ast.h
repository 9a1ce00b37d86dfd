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

#ifndef OSPEC_AST_H_
#define OSPEC_AST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ospec/error.h"

namespace ospec {

// Term of the specification language. Arith holds exactly two operands.
struct Term {
  enum class Kind {
    kInt,
    kSymbol,
    kVariable,
    kAnonymous,
    kParamScalar,
    kMethodValue,
    kArith,
  };

  Kind kind = Kind::kInt;
  std::int64_t number = 0;
  // Symbol name, variable name (without '?'), scalar parameter name, or the
  // base variable of a method value.
  std::string name;
  std::string method;
  char op = '+';
  std::vector<Term> operands;

  static Term Int(std::int64_t v);
  static Term Sym(std::string name);
  static Term Var(std::string name);
  static Term Anonymous();
  static Term ParamScalar(std::string name);
  static Term MethodValue(std::string var, std::string method);
  static Term Arith(Term lhs, char op, Term rhs);

  bool is_variable() const { return kind == Kind::kVariable; }

  friend bool operator==(const Term&, const Term&) = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  friend bool operator==(const Atom&, const Atom&) = default;
};

// `V?param(I)`: V is the object at index I of array parameter `param`.
struct ParamMembership {
  std::string var;
  std::string param;
  Term index;

  friend bool operator==(const ParamMembership&, const ParamMembership&) = default;
};

// `V?Class(args)`: V is the object created by `new Class(args)`.
struct CreationRef {
  std::string var;
  std::string class_name;
  std::vector<Term> args;

  friend bool operator==(const CreationRef&, const CreationRef&) = default;
};

enum class CompareOp { kEq, kNe, kLt, kGt, kLe, kGe };

struct Comparison {
  Term lhs;
  CompareOp op = CompareOp::kEq;
  Term rhs;

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

using Condition = std::variant<Atom, ParamMembership, CreationRef, Comparison>;

struct CardElement {
  Atom atom;
  std::vector<Condition> conditions;

  friend bool operator==(const CardElement&, const CardElement&) = default;
};

// `lower { elements } upper`, used both as choice head and body literal.
struct Cardinality {
  std::optional<Term> lower;
  std::vector<CardElement> elements;
  std::optional<Term> upper;

  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

// `N? = { elements }`.
struct CountAssignment {
  std::string var;
  std::vector<CardElement> elements;

  friend bool operator==(const CountAssignment&, const CountAssignment&) = default;
};

struct NewAtom {
  std::string class_name;
  std::vector<Term> args;

  friend bool operator==(const NewAtom&, const NewAtom&) = default;
};

struct ExeAtom {
  std::int64_t stage = 0;
  std::string target;
  std::string method;
  std::vector<Term> args;

  friend bool operator==(const ExeAtom&, const ExeAtom&) = default;
};

struct ReturnAtom {
  std::string target;

  friend bool operator==(const ReturnAtom&, const ReturnAtom&) = default;
};

using Head = std::variant<Atom, Cardinality, NewAtom, ExeAtom, ReturnAtom>;

struct Literal {
  bool negated = false;
  std::variant<Atom, ParamMembership, CreationRef, Comparison, Cardinality,
               CountAssignment>
      node;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Rule {
  std::optional<Head> head;
  std::vector<Literal> body;
  SourceLocation where;

  bool is_constraint() const { return !head.has_value(); }
  bool is_fact() const { return head.has_value() && body.empty(); }

  // Source locations do not take part in structural equality.
  friend bool operator==(const Rule& a, const Rule& b) {
    return a.head == b.head && a.body == b.body;
  }
};

struct MinimizeStatement {
  std::vector<CardElement> elements;

  friend bool operator==(const MinimizeStatement&, const MinimizeStatement&) = default;
};

struct ParamDecl {
  enum class Kind { kInt, kObjectArray };

  std::string name;
  Kind kind = Kind::kInt;
  std::string class_name;  // element class for kObjectArray

  bool is_array() const { return kind == Kind::kObjectArray; }

  friend bool operator==(const ParamDecl&, const ParamDecl&) = default;
};

struct SpecProgram {
  std::optional<std::string> package_name;
  std::vector<std::string> imports;
  std::string name;
  std::vector<ParamDecl> params;
  std::vector<Rule> rules;
  std::optional<MinimizeStatement> minimize;

  const ParamDecl* FindParam(const std::string& param_name) const;

  friend bool operator==(const SpecProgram&, const SpecProgram&) = default;
};

std::string_view CompareOpText(CompareOp op);

// Pretty-printers. ToSource produces text that parses back to an equal AST.
std::string ToString(const Term& term);
std::string ToString(const Atom& atom);
std::string ToString(const Condition& condition);
std::string ToString(const CardElement& element);
std::string ToString(const Literal& literal);
std::string ToString(const Head& head);
std::string ToString(const Rule& rule);
std::string ToSource(const SpecProgram& spec);

}  // namespace ospec

#endif  // OSPEC_AST_H_
