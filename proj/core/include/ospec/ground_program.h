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

#ifndef OSPEC_GROUND_PROGRAM_H_
#define OSPEC_GROUND_PROGRAM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ospec/value.h"

namespace ospec {

using AtomId = std::uint32_t;

// Variable-free atom. Field use by kind:
//   kOrdinary     name = predicate, args
//   kNew          name = class, args            (constructor call)
//   kExe          name = method, stage, target, args
//   kReturn       target
//   kParamMember  name = parameter, args = (index, object)
struct GroundAtom {
  enum class Kind { kOrdinary, kNew, kExe, kReturn, kParamMember };

  Kind kind = Kind::kOrdinary;
  std::string name;
  std::int64_t stage = 0;
  Value target;
  std::vector<Value> args;

  static GroundAtom Ordinary(std::string predicate, std::vector<Value> args = {});
  static GroundAtom New(std::string class_name, std::vector<Value> args);
  static GroundAtom Exe(std::int64_t stage, ObjectId target, std::string method,
                        std::vector<Value> args);
  static GroundAtom Return(ObjectId target);
  static GroundAtom ParamMember(std::string param, std::int64_t index,
                                ObjectId object);

  // Skolem id of the object a kNew atom creates.
  ObjectId CreatedObject() const;

  std::string ToString() const;
  std::size_t Hash() const;

  friend bool operator==(const GroundAtom& a, const GroundAtom& b);
  friend std::strong_ordering operator<=>(const GroundAtom& a,
                                          const GroundAtom& b);
};

struct GroundAtomHash {
  std::size_t operator()(const GroundAtom& a) const { return a.Hash(); }
};

// `lower { literals } upper`; absent lower means 0, absent upper means no
// upper limit.
struct GroundCardinality {
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
  std::vector<AtomId> literals;

  std::int64_t lower_or_zero() const { return lower.value_or(0); }
  friend bool operator==(const GroundCardinality&, const GroundCardinality&) = default;
};

struct GroundRule {
  enum class HeadKind { kNone, kAtom, kChoice };

  HeadKind head_kind = HeadKind::kNone;
  AtomId head = 0;
  // kChoice: bounds apply to the number of true atoms in choice.literals.
  GroundCardinality choice;
  std::vector<AtomId> body_pos;
  std::vector<AtomId> body_neg;
  std::vector<GroundCardinality> body_card;

  bool is_constraint() const { return head_kind == HeadKind::kNone; }
  bool is_choice() const { return head_kind == HeadKind::kChoice; }

  static GroundRule Fact(AtomId head);
  static GroundRule Normal(AtomId head, std::vector<AtomId> pos,
                           std::vector<AtomId> neg = {});
  static GroundRule Constraint(std::vector<AtomId> pos,
                               std::vector<AtomId> neg = {});
  static GroundRule Choice(GroundCardinality head, std::vector<AtomId> pos = {},
                           std::vector<AtomId> neg = {});

  friend bool operator==(const GroundRule&, const GroundRule&) = default;
};

class GroundProgram {
 public:
  // Returns the id of `atom`, assigning the next dense id when new.
  AtomId Intern(const GroundAtom& atom);
  std::optional<AtomId> Find(const GroundAtom& atom) const;

  const GroundAtom& atom(AtomId id) const { return atoms_[id]; }
  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<GroundAtom>& atoms() const { return atoms_; }

  void AddRule(GroundRule rule) { rules_.push_back(std::move(rule)); }
  const std::vector<GroundRule>& rules() const { return rules_; }

  void AddMinimize(AtomId atom);
  const std::vector<AtomId>& minimize() const { return minimize_; }
  bool has_minimize() const { return has_minimize_; }
  void set_has_minimize(bool value) { has_minimize_ = value; }

  // Human-readable listing, one rule per line.
  std::string ToString() const;
  std::string RuleToString(const GroundRule& rule) const;

 private:
  std::vector<GroundAtom> atoms_;
  std::unordered_map<GroundAtom, AtomId, GroundAtomHash> index_;
  std::vector<GroundRule> rules_;
  std::vector<AtomId> minimize_;
  bool has_minimize_ = false;
};

}  // namespace ospec

#endif  // OSPEC_GROUND_PROGRAM_H_
