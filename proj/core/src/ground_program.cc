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

#include "ospec/ground_program.h"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ospec {

GroundAtom GroundAtom::Ordinary(std::string predicate, std::vector<Value> args) {
  GroundAtom a;
  a.kind = Kind::kOrdinary;
  a.name = std::move(predicate);
  a.args = std::move(args);
  return a;
}

GroundAtom GroundAtom::New(std::string class_name, std::vector<Value> args) {
  GroundAtom a;
  a.kind = Kind::kNew;
  a.name = std::move(class_name);
  a.args = std::move(args);
  return a;
}

GroundAtom GroundAtom::Exe(std::int64_t stage, ObjectId target,
                           std::string method, std::vector<Value> args) {
  GroundAtom a;
  a.kind = Kind::kExe;
  a.stage = stage;
  a.target = Value::Object(std::move(target));
  a.name = std::move(method);
  a.args = std::move(args);
  return a;
}

GroundAtom GroundAtom::Return(ObjectId target) {
  GroundAtom a;
  a.kind = Kind::kReturn;
  a.target = Value::Object(std::move(target));
  return a;
}

GroundAtom GroundAtom::ParamMember(std::string param, std::int64_t index,
                                   ObjectId object) {
  GroundAtom a;
  a.kind = Kind::kParamMember;
  a.name = std::move(param);
  a.args = {Value::Int(index), Value::Object(std::move(object))};
  return a;
}

ObjectId GroundAtom::CreatedObject() const {
  return ObjectId::Created(name, args);
}

std::string GroundAtom::ToString() const {
  auto with_args = [&](const std::string& head) {
    return args.empty() ? head : head + "(" + JoinValues(args) + ")";
  };
  switch (kind) {
    case Kind::kOrdinary: return with_args(name);
    case Kind::kNew: return "new " + name + "(" + JoinValues(args) + ")";
    case Kind::kExe: {
      std::string out = "exe";
      if (stage != 0) out += "[" + std::to_string(stage) + "]";
      return out + " " + target.ToString() + "." + name + "(" +
             JoinValues(args) + ")";
    }
    case Kind::kReturn: return "return " + target.ToString();
    case Kind::kParamMember:
      return "param_member(" + name + "," + JoinValues(args) + ")";
  }
  return {};
}

std::size_t GroundAtom::Hash() const {
  std::size_t h = std::hash<int>{}(static_cast<int>(kind));
  h = HashCombine(h, std::hash<std::string>{}(name));
  h = HashCombine(h, std::hash<std::int64_t>{}(stage));
  h = HashCombine(h, target.Hash());
  for (const Value& v : args) h = HashCombine(h, v.Hash());
  return h;
}

std::strong_ordering operator<=>(const GroundAtom& a, const GroundAtom& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.stage <=> b.stage; c != 0) return c;
  if (auto c = a.target <=> b.target; c != 0) return c;
  if (auto c = a.name <=> b.name; c != 0) return c;
  return CompareTuples(a.args, b.args);
}

bool operator==(const GroundAtom& a, const GroundAtom& b) {
  return (a <=> b) == 0;
}

GroundRule GroundRule::Fact(AtomId head) { return Normal(head, {}); }

GroundRule GroundRule::Normal(AtomId head, std::vector<AtomId> pos,
                              std::vector<AtomId> neg) {
  GroundRule r;
  r.head_kind = HeadKind::kAtom;
  r.head = head;
  r.body_pos = std::move(pos);
  r.body_neg = std::move(neg);
  return r;
}

GroundRule GroundRule::Constraint(std::vector<AtomId> pos,
                                  std::vector<AtomId> neg) {
  GroundRule r;
  r.head_kind = HeadKind::kNone;
  r.body_pos = std::move(pos);
  r.body_neg = std::move(neg);
  return r;
}

GroundRule GroundRule::Choice(GroundCardinality head, std::vector<AtomId> pos,
                              std::vector<AtomId> neg) {
  GroundRule r;
  r.head_kind = HeadKind::kChoice;
  r.choice = std::move(head);
  r.body_pos = std::move(pos);
  r.body_neg = std::move(neg);
  return r;
}

AtomId GroundProgram::Intern(const GroundAtom& atom) {
  auto [it, inserted] =
      index_.try_emplace(atom, static_cast<AtomId>(atoms_.size()));
  if (inserted) atoms_.push_back(atom);
  return it->second;
}

std::optional<AtomId> GroundProgram::Find(const GroundAtom& atom) const {
  auto it = index_.find(atom);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void GroundProgram::AddMinimize(AtomId atom) {
  has_minimize_ = true;
  if (std::find(minimize_.begin(), minimize_.end(), atom) == minimize_.end()) {
    minimize_.push_back(atom);
  }
}

namespace {

std::string CardToString(const GroundProgram& p, const GroundCardinality& c) {
  std::string out;
  if (c.lower) out += std::to_string(*c.lower) + " ";
  out += "{";
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i > 0) out += "; ";
    out += p.atom(c.literals[i]).ToString();
  }
  out += "}";
  if (c.upper) out += " " + std::to_string(*c.upper);
  return out;
}

}  // namespace

std::string GroundProgram::RuleToString(const GroundRule& rule) const {
  std::string out;
  switch (rule.head_kind) {
    case GroundRule::HeadKind::kAtom: out = atom(rule.head).ToString(); break;
    case GroundRule::HeadKind::kChoice: out = CardToString(*this, rule.choice); break;
    case GroundRule::HeadKind::kNone: break;
  }
  std::vector<std::string> body;
  for (AtomId a : rule.body_pos) body.push_back(atom(a).ToString());
  for (AtomId a : rule.body_neg) body.push_back("not " + atom(a).ToString());
  for (const GroundCardinality& c : rule.body_card) {
    body.push_back(CardToString(*this, c));
  }
  if (!body.empty() || rule.is_constraint()) {
    out += rule.is_constraint() ? ":-" : " :-";
    for (std::size_t i = 0; i < body.size(); ++i) {
      out += (i == 0 ? " " : ", ") + body[i];
    }
  }
  return out + ".";
}

std::string GroundProgram::ToString() const {
  std::ostringstream out;
  for (const GroundRule& r : rules_) out << RuleToString(r) << "\n";
  if (has_minimize_) {
    out << "#minimize{";
    for (std::size_t i = 0; i < minimize_.size(); ++i) {
      if (i > 0) out << "; ";
      out << atom(minimize_[i]).ToString();
    }
    out << "}.\n";
  }
  return out.str();
}

}  // namespace ospec
