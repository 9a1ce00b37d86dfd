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

#include "ospec/parser.h"

#include <set>

#include "ospec/lexer.h"

namespace ospec {

namespace {

enum class ElementContext { kChoice, kBody, kMinimize };

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SpecProgram Run() {
    ParseHeader();
    Expect("{");
    while (!AtPunct("}")) {
      if (AtEnd()) Fail("unexpected end of input inside specification body");
      if (Cur().IsKeyword("#minimize")) {
        ParseMinimize();
      } else {
        spec_.rules.push_back(ParseRule());
      }
    }
    Expect("}");
    if (!AtEnd()) Fail("unexpected input after specification body");
    return std::move(spec_);
  }

 private:
  // ---------------------------------------------------------------- cursor

  bool AtEnd(std::size_t ahead = 0) const { return pos_ + ahead >= toks_.size(); }

  const Token& Cur() const { return Peek(0); }

  const Token& Peek(std::size_t ahead) const {
    static const Token kEnd{TokenKind::kPunct, "<end>", 0, {}};
    return AtEnd(ahead) ? kEnd : toks_[pos_ + ahead];
  }

  bool AtPunct(std::string_view p, std::size_t ahead = 0) const {
    return !AtEnd(ahead) && Peek(ahead).IsPunct(p);
  }

  bool AtKind(TokenKind k, std::size_t ahead = 0) const {
    return !AtEnd(ahead) && Peek(ahead).kind == k;
  }

  SourceLocation Where() const {
    if (!AtEnd()) return Cur().where;
    return toks_.empty() ? SourceLocation{1, 1} : toks_.back().where;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw Error(Stage::kParse, message, Where());
  }

  std::string Describe() const {
    return AtEnd() ? "end of input" : "'" + Cur().text + "'";
  }

  const Token& Take() {
    if (AtEnd()) Fail("unexpected end of input");
    return toks_[pos_++];
  }

  void Expect(std::string_view punct) {
    if (!AtPunct(punct)) {
      Fail("expected '" + std::string(punct) + "' but found " + Describe());
    }
    ++pos_;
  }

  bool Accept(std::string_view punct) {
    if (AtPunct(punct)) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string TakeIdentifier(std::string_view what) {
    if (!AtKind(TokenKind::kIdentifier)) {
      Fail("expected " + std::string(what) + " but found " + Describe());
    }
    return Take().text;
  }

  std::string TakeVariable(std::string_view what) {
    if (!AtKind(TokenKind::kVariable)) {
      Fail("expected " + std::string(what) + " but found " + Describe());
    }
    return Take().text;
  }

  // ---------------------------------------------------------------- header

  std::string ParseDotted(bool allow_wildcard) {
    std::string name = TakeIdentifier("a name");
    while (AtPunct(".")) {
      ++pos_;
      if (allow_wildcard && AtPunct("*")) {
        ++pos_;
        name += ".*";
        break;
      }
      name += "." + TakeIdentifier("a name component");
    }
    return name;
  }

  void ParseHeader() {
    if (Cur().IsKeyword("package") && !AtEnd()) {
      ++pos_;
      spec_.package_name = ParseDotted(false);
      Expect(";");
    }
    std::set<std::string> classes;
    while (!AtEnd() && Cur().IsKeyword("import")) {
      ++pos_;
      std::string imp = ParseDotted(true);
      Expect(";");
      if (!imp.ends_with(".*")) {
        classes.insert(imp.substr(imp.rfind('.') + 1));
      }
      spec_.imports.push_back(std::move(imp));
    }
    spec_.name = TakeIdentifier("specification name");
    Expect("(");
    if (!AtPunct(")")) {
      do {
        SourceLocation where = Where();
        ParamDecl p;
        std::string type = TakeIdentifier("parameter type");
        if (Accept("[")) {
          Expect("]");
          p.kind = ParamDecl::Kind::kObjectArray;
          p.class_name = type;
          classes.insert(type);
        } else if (type == "int") {
          p.kind = ParamDecl::Kind::kInt;
        } else {
          Fail("parameter type must be 'int' or 'Class[]', found '" + type + "'");
        }
        p.name = TakeIdentifier("parameter name");
        if (spec_.FindParam(p.name) != nullptr) {
          throw Error(Stage::kParse, "duplicate parameter '" + p.name + "'",
                      where);
        }
        spec_.params.push_back(std::move(p));
      } while (Accept(","));
    }
    Expect(")");
    for (const ParamDecl& p : spec_.params) {
      if (classes.contains(p.name)) {
        throw Error(Stage::kParse,
                    "ambiguous identifier '" + p.name +
                        "' names both a parameter and a class");
      }
    }
  }

  // ---------------------------------------------------------------- terms

  bool AtTermStart() const {
    if (AtEnd()) return false;
    switch (Cur().kind) {
      case TokenKind::kInteger:
      case TokenKind::kIdentifier:
      case TokenKind::kVariable:
      case TokenKind::kAnonymous:
        return true;
      case TokenKind::kOperator: return Cur().text == "-";
      case TokenKind::kPunct: return Cur().text == "(";
      default: return false;
    }
  }

  bool AtMethodValue() const {
    return AtKind(TokenKind::kVariable) && AtPunct(".", 1) &&
           AtKind(TokenKind::kIdentifier, 2) && AtPunct("(", 3) &&
           AtPunct(")", 4);
  }

  Term ParsePrimary() {
    if (AtEnd()) Fail("expected a term but found end of input");
    const Token& t = Cur();
    switch (t.kind) {
      case TokenKind::kInteger:
        ++pos_;
        return Term::Int(t.value);
      case TokenKind::kAnonymous:
        ++pos_;
        return Term::Anonymous();
      case TokenKind::kVariable: {
        if (AtMethodValue()) {
          std::string var = Take().text;
          ++pos_;  // '.'
          std::string method = Take().text;
          pos_ += 2;  // '(' ')'
          return Term::MethodValue(std::move(var), std::move(method));
        }
        ++pos_;
        return Term::Var(t.text);
      }
      case TokenKind::kIdentifier: {
        ++pos_;
        if (const ParamDecl* p = spec_.FindParam(t.text)) {
          if (p->is_array()) {
            --pos_;
            Fail("array parameter '" + t.text + "' cannot be used as a term");
          }
          return Term::ParamScalar(t.text);
        }
        return Term::Sym(t.text);
      }
      case TokenKind::kOperator:
        if (t.text == "-" && AtKind(TokenKind::kInteger, 1)) {
          ++pos_;
          return Term::Int(-Take().value);
        }
        break;
      case TokenKind::kPunct:
        if (t.text == "(") {
          ++pos_;
          Term inner = ParseTerm();
          Expect(")");
          return inner;
        }
        break;
      default:
        break;
    }
    Fail("expected a term but found " + Describe());
  }

  Term ParseTerm() {
    Term lhs = ParsePrimary();
    while (!AtEnd() && (Cur().IsOperator("+") || Cur().IsOperator("-"))) {
      char op = Take().text[0];
      lhs = Term::Arith(std::move(lhs), op, ParsePrimary());
    }
    return lhs;
  }

  std::vector<Term> ParseArgs(bool allow_empty) {
    Expect("(");
    std::vector<Term> args;
    if (AtPunct(")")) {
      if (!allow_empty) Fail("empty argument list");
      ++pos_;
      return args;
    }
    do {
      args.push_back(ParseTerm());
    } while (Accept(","));
    Expect(")");
    return args;
  }

  std::optional<CompareOp> AtCompareOp() const {
    if (!AtKind(TokenKind::kOperator)) return std::nullopt;
    const std::string& t = Cur().text;
    if (t == "==") return CompareOp::kEq;
    if (t == "!=") return CompareOp::kNe;
    if (t == "<") return CompareOp::kLt;
    if (t == ">") return CompareOp::kGt;
    if (t == "<=") return CompareOp::kLe;
    if (t == ">=") return CompareOp::kGe;
    return std::nullopt;
  }

  // ---------------------------------------------------------------- atoms

  Atom ParseAtom() {
    Atom atom;
    atom.predicate = TakeIdentifier("a predicate name");
    if (AtPunct("(")) atom.args = ParseArgs(false);
    return atom;
  }

  // `V?name(...)`, resolved to membership or creation reference.
  std::variant<ParamMembership, CreationRef> ParseObjectAtom() {
    SourceLocation where = Where();
    std::string var = TakeVariable("a variable");
    std::string name = TakeIdentifier("a parameter or class name");
    std::vector<Term> args = ParseArgs(true);
    if (const ParamDecl* p = spec_.FindParam(name)) {
      if (!p->is_array()) {
        throw Error(Stage::kParse,
                    "scalar parameter '" + name + "' has no members", where);
      }
      if (args.size() != 1) {
        throw Error(Stage::kParse,
                    "membership in '" + name + "' takes exactly one index",
                    where);
      }
      return ParamMembership{std::move(var), std::move(name),
                             std::move(args.front())};
    }
    return CreationRef{std::move(var), std::move(name), std::move(args)};
  }

  bool AtObjectAtom() const {
    return AtKind(TokenKind::kVariable) && AtKind(TokenKind::kIdentifier, 1) &&
           AtPunct("(", 2);
  }

  // An identifier starts an atom unless it is used as a term operand.
  bool AtAtom() const {
    if (!AtKind(TokenKind::kIdentifier)) return false;
    if (AtPunct("(", 1)) return true;
    if (AtEnd(1)) return true;
    const Token& next = Peek(1);
    if (next.kind == TokenKind::kOperator) return false;
    if (next.IsPunct("{")) return false;
    return true;
  }

  Condition ParseCondition() {
    if (!AtEnd() && Cur().IsKeyword("not")) {
      Fail("negated conditions are not supported in cardinality elements");
    }
    if (AtObjectAtom()) {
      return std::visit([](auto&& v) -> Condition { return std::move(v); },
                        ParseObjectAtom());
    }
    if (AtAtom()) return ParseAtom();
    Term lhs = ParseTerm();
    auto op = AtCompareOp();
    if (!op) Fail("expected a comparison operator but found " + Describe());
    ++pos_;
    return Comparison{std::move(lhs), *op, ParseTerm()};
  }

  std::vector<CardElement> ParseElements() {
    Expect("{");
    std::vector<CardElement> elements;
    if (!AtPunct("}")) {
      do {
        CardElement e;
        if (!AtKind(TokenKind::kIdentifier)) {
          Fail("expected an atom in cardinality element but found " +
               Describe());
        }
        e.atom = ParseAtom();
        while (Accept(":")) e.conditions.push_back(ParseCondition());
        elements.push_back(std::move(e));
      } while (Accept(",") || Accept(";"));
    }
    Expect("}");
    return elements;
  }

  Cardinality ParseCardinalityFrom(std::optional<Term> lower) {
    Cardinality card;
    card.lower = std::move(lower);
    card.elements = ParseElements();
    if (AtTermStart()) card.upper = ParseTerm();
    return card;
  }

  // ---------------------------------------------------------------- rules

  Head ParseHead() {
    const Token& t = Cur();
    if (t.IsKeyword("new")) {
      ++pos_;
      NewAtom n;
      n.class_name = TakeIdentifier("a class name");
      n.args = ParseArgs(true);
      return n;
    }
    if (t.IsKeyword("exe")) {
      ++pos_;
      ExeAtom e;
      if (Accept("[")) {
        if (!AtKind(TokenKind::kInteger)) {
          Fail("exe stage must be a non-negative integer");
        }
        e.stage = Take().value;
        Expect("]");
      }
      e.target = TakeVariable("an invocation target variable");
      Expect(".");
      e.method = TakeIdentifier("a method name");
      e.args = ParseArgs(true);
      return e;
    }
    if (t.IsKeyword("return")) {
      ++pos_;
      return ReturnAtom{TakeVariable("a return variable")};
    }
    if (t.kind == TokenKind::kKeyword) {
      Fail("reserved keyword '" + t.text + "' cannot start a rule head");
    }
    if (AtPunct("{")) return ParseCardinalityFrom(std::nullopt);
    if (AtAtom()) return ParseAtom();
    Term lower = ParseTerm();
    if (!AtPunct("{")) Fail("expected '{' but found " + Describe());
    return ParseCardinalityFrom(std::move(lower));
  }

  Literal ParseLiteral() {
    Literal lit;
    if (!AtEnd() && Cur().IsKeyword("not")) {
      ++pos_;
      lit.negated = true;
      if (AtObjectAtom()) {
        std::visit([&](auto&& v) { lit.node = std::move(v); },
                   ParseObjectAtom());
      } else if (AtKind(TokenKind::kIdentifier)) {
        lit.node = ParseAtom();
      } else {
        Fail("'not' applies only to atoms, found " + Describe());
      }
      return lit;
    }
    if (AtPunct("{")) {
      lit.node = ParseCardinalityFrom(std::nullopt);
      return lit;
    }
    if (AtObjectAtom()) {
      std::visit([&](auto&& v) { lit.node = std::move(v); }, ParseObjectAtom());
      return lit;
    }
    if (AtKind(TokenKind::kVariable) && !AtEnd(1) && Peek(1).IsOperator("=")) {
      CountAssignment count;
      count.var = Take().text;
      ++pos_;
      count.elements = ParseElements();
      lit.node = std::move(count);
      return lit;
    }
    if (AtAtom()) {
      lit.node = ParseAtom();
      return lit;
    }
    Term lhs = ParseTerm();
    if (AtPunct("{")) {
      lit.node = ParseCardinalityFrom(std::move(lhs));
      return lit;
    }
    auto op = AtCompareOp();
    if (!op) {
      Fail("expected a comparison or cardinality but found " + Describe());
    }
    ++pos_;
    lit.node = Comparison{std::move(lhs), *op, ParseTerm()};
    return lit;
  }

  Rule ParseRule() {
    Rule rule;
    rule.where = Where();
    if (!AtPunct(":-")) rule.head = ParseHead();
    if (Accept(":-")) {
      if (!AtPunct(".")) {
        do {
          rule.body.push_back(ParseLiteral());
        } while (Accept(","));
      }
    }
    Expect(".");
    if (!rule.head && rule.body.empty()) {
      throw Error(Stage::kParse, "integrity constraint with empty body",
                  rule.where);
    }
    return rule;
  }

  void ParseMinimize() {
    SourceLocation where = Where();
    ++pos_;
    if (spec_.minimize) {
      throw Error(Stage::kParse, "at most one #minimize statement is allowed",
                  where);
    }
    spec_.minimize = MinimizeStatement{ParseElements()};
    Accept(".");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SpecProgram spec_;
};

}  // namespace

SpecProgram ParseSpec(std::string_view source) {
  return Parser(Tokenize(source)).Run();
}

}  // namespace ospec
