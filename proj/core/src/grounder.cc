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

#include "ospec/grounder.h"

#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

#include "ospec/error.h"

namespace ospec {

namespace {

class Binding {
 public:
  const Value* Get(const std::string& name) const {
    for (auto it = vars_.rbegin(); it != vars_.rend(); ++it) {
      if (it->first == name) return &it->second;
    }
    return nullptr;
  }
  void Push(const std::string& name, Value v) { vars_.emplace_back(name, std::move(v)); }
  std::size_t size() const { return vars_.size(); }
  void Truncate(std::size_t n) { vars_.resize(n); }

 private:
  std::vector<std::pair<std::string, Value>> vars_;
};

class AtomStore {
 public:
  bool Add(const GroundAtom& a) {
    if (!set_.insert(a).second) return false;
    by_sig_[Key(a.kind, a.name, a.args.size())].push_back(a);
    return true;
  }

  bool Contains(const GroundAtom& a) const { return set_.contains(a); }

  const std::vector<GroundAtom>& Candidates(GroundAtom::Kind kind,
                                            const std::string& name,
                                            std::size_t arity) const {
    static const std::vector<GroundAtom> kEmpty;
    auto it = by_sig_.find(Key(kind, name, arity));
    return it == by_sig_.end() ? kEmpty : it->second;
  }

 private:
  using SigKey = std::tuple<int, std::string, std::size_t>;
  static SigKey Key(GroundAtom::Kind kind, const std::string& name,
                    std::size_t arity) {
    return {static_cast<int>(kind), name, arity};
  }

  std::unordered_set<GroundAtom, GroundAtomHash> set_;
  std::map<SigKey, std::vector<GroundAtom>> by_sig_;
};

enum class Role { kBody, kTemplate, kCondition };

struct Item {
  enum class Kind { kAtom, kMember, kCreation, kCompare, kCount };

  Kind kind = Kind::kAtom;
  Role role = Role::kBody;
  const Atom* atom = nullptr;
  const ParamMembership* member = nullptr;
  const CreationRef* creation = nullptr;
  const Comparison* compare = nullptr;
  const CountAssignment* count = nullptr;
  std::size_t literal_index = 0;
  // Variables that must be bound before the item can be processed.
  std::set<std::string> needs;
};

// One instance of a cardinality element: the element atom plus condition
// atoms that are not fixed by definite rules.
struct ElementLit {
  GroundAtom atom;
  std::vector<GroundAtom> conds;
};

struct CountCard {
  std::int64_t k = 0;
  std::size_t literal_index = 0;
  std::vector<ElementLit> lits;
};

struct Ctx {
  std::vector<std::pair<Role, GroundAtom>> matched;
  std::vector<CountCard> counts;
};

void CollectVars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::kVariable || t.kind == Term::Kind::kMethodValue) {
    out.insert(t.name);
  }
  for (const Term& o : t.operands) CollectVars(o, out);
}

// Variables in positions that cannot bind (anything but a plain variable).
void CollectNeeds(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::kVariable || t.kind == Term::Kind::kAnonymous) return;
  CollectVars(t, out);
}

void CollectNeeds(const std::vector<Term>& ts, std::set<std::string>& out) {
  for (const Term& t : ts) CollectNeeds(t, out);
}

std::set<std::string> ElementVars(const std::vector<CardElement>& elements) {
  std::set<std::string> out;
  for (const CardElement& e : elements) {
    for (const Term& t : e.atom.args) CollectVars(t, out);
    for (const Condition& c : e.conditions) {
      std::visit(
          [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Atom>) {
              for (const Term& t : n.args) CollectVars(t, out);
            } else if constexpr (std::is_same_v<T, ParamMembership>) {
              out.insert(n.var);
              CollectVars(n.index, out);
            } else if constexpr (std::is_same_v<T, CreationRef>) {
              out.insert(n.var);
              for (const Term& t : n.args) CollectVars(t, out);
            } else {
              CollectVars(n.lhs, out);
              CollectVars(n.rhs, out);
            }
          },
          c);
    }
  }
  return out;
}

bool HasVariables(const std::vector<Term>& ts) {
  std::set<std::string> vars;
  for (const Term& t : ts) CollectVars(t, vars);
  return !vars.empty();
}

class Instantiator {
 public:
  Instantiator(const SpecProgram& spec, const FactBase& facts)
      : spec_(spec), facts_(facts) {
    for (const ParamMemberFact& m : facts.members) {
      members_[m.param].push_back(&m);
    }
    for (const MethodValueFact& f : facts.method_values) {
      method_values_[{f.object, f.method}] = f.value;
    }
  }

  GroundProgram Run() {
    ComputePossible();
    ComputeCertain();
    EmitAll();
    return std::move(program_);
  }

 private:
  // ------------------------------------------------------------ evaluation

  [[noreturn]] void Fail(const std::string& message) const {
    throw Error(Stage::kGround, message, where_);
  }

  Value Eval(const Term& t) const {
    switch (t.kind) {
      case Term::Kind::kInt: return Value::Int(t.number);
      case Term::Kind::kSymbol: return Value::Sym(t.name);
      case Term::Kind::kVariable: {
        const Value* v = binding_.Get(t.name);
        if (v == nullptr) Fail("variable " + t.name + "? is not bound");
        return *v;
      }
      case Term::Kind::kAnonymous: Fail("'_' cannot be evaluated");
      case Term::Kind::kParamScalar: {
        auto it = facts_.scalars.find(t.name);
        if (it == facts_.scalars.end()) Fail("no value for parameter " + t.name);
        return Value::Int(it->second);
      }
      case Term::Kind::kMethodValue: {
        const Value* base = binding_.Get(t.name);
        if (base == nullptr) Fail("variable " + t.name + "? is not bound");
        if (!base->is_object()) {
          Fail("method value " + t.name + "?." + t.method +
               "() on non-object " + base->ToString());
        }
        auto it = method_values_.find({base->as_object(), t.method});
        if (it == method_values_.end()) {
          Fail("method_val lookup miss for " + base->ToString() + "." +
               t.method + "()");
        }
        return Value::Int(it->second);
      }
      case Term::Kind::kArith: {
        Value lhs = Eval(t.operands[0]);
        Value rhs = Eval(t.operands[1]);
        if (!lhs.is_int() || !rhs.is_int()) {
          Fail("arithmetic on non-integer operands in " + ToString(t));
        }
        std::int64_t out = 0;
        bool overflow =
            t.op == '+' ? __builtin_add_overflow(lhs.as_int(), rhs.as_int(), &out)
                        : __builtin_sub_overflow(lhs.as_int(), rhs.as_int(), &out);
        if (overflow) Fail("integer overflow in " + ToString(t));
        return Value::Int(out);
      }
    }
    Fail("unknown term");
  }

  std::vector<Value> EvalAll(const std::vector<Term>& ts) const {
    std::vector<Value> out;
    out.reserve(ts.size());
    for (const Term& t : ts) out.push_back(Eval(t));
    return out;
  }

  std::int64_t EvalInt(const Term& t) const {
    Value v = Eval(t);
    if (!v.is_int()) Fail("expected an integer for " + ToString(t));
    return v.as_int();
  }

  bool Match(const Term& pattern, const Value& v) {
    switch (pattern.kind) {
      case Term::Kind::kAnonymous: return true;
      case Term::Kind::kVariable: {
        if (const Value* bound = binding_.Get(pattern.name)) return *bound == v;
        binding_.Push(pattern.name, v);
        return true;
      }
      default: return Eval(pattern) == v;
    }
  }

  bool MatchArgs(const std::vector<Term>& patterns, const std::vector<Value>& vs) {
    if (patterns.size() != vs.size()) return false;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (!Match(patterns[i], vs[i])) return false;
    }
    return true;
  }

  bool Compare(const Comparison& c) const {
    Value lhs = Eval(c.lhs);
    Value rhs = Eval(c.rhs);
    auto order = lhs <=> rhs;
    switch (c.op) {
      case CompareOp::kEq: return order == 0;
      case CompareOp::kNe: return order != 0;
      case CompareOp::kLt: return order < 0;
      case CompareOp::kGt: return order > 0;
      case CompareOp::kLe: return order <= 0;
      case CompareOp::kGe: return order >= 0;
    }
    return false;
  }

  bool MemberHolds(const ParamMembership& m) const {
    const Value object = Eval(Term::Var(m.var));
    auto it = members_.find(m.param);
    if (it == members_.end()) return false;
    for (const ParamMemberFact* f : it->second) {
      if (!object.is_object() || !(f->object == object.as_object())) continue;
      if (m.index.kind == Term::Kind::kAnonymous) return true;
      if (Eval(m.index) == Value::Int(f->index)) return true;
    }
    return false;
  }

  // ------------------------------------------------------------ items

  Item MakeAtomItem(const Atom& atom, Role role) {
    Item it;
    it.kind = Item::Kind::kAtom;
    it.role = role;
    it.atom = &atom;
    CollectNeeds(atom.args, it.needs);
    return it;
  }

  Item MakeConditionItem(const Condition& c, Role role) {
    return std::visit(
        [&](const auto& n) -> Item {
          using T = std::decay_t<decltype(n)>;
          Item it;
          it.role = role;
          if constexpr (std::is_same_v<T, Atom>) {
            return MakeAtomItem(n, role);
          } else if constexpr (std::is_same_v<T, ParamMembership>) {
            it.kind = Item::Kind::kMember;
            it.member = &n;
            CollectNeeds(n.index, it.needs);
          } else if constexpr (std::is_same_v<T, CreationRef>) {
            it.kind = Item::Kind::kCreation;
            it.creation = &n;
            CollectNeeds(n.args, it.needs);
          } else {
            it.kind = Item::Kind::kCompare;
            it.compare = &n;
            CollectVars(n.lhs, it.needs);
            CollectVars(n.rhs, it.needs);
          }
          return it;
        },
        c);
  }

  // Variables of a rule occurring outside cardinality elements.
  static std::set<std::string> GlobalVars(const Rule& rule) {
    std::set<std::string> out;
    auto terms = [&](const std::vector<Term>& ts) {
      for (const Term& t : ts) CollectVars(t, out);
    };
    if (rule.head) {
      std::visit(
          [&](const auto& h) {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, Atom> || std::is_same_v<T, NewAtom>) {
              terms(h.args);
            } else if constexpr (std::is_same_v<T, ExeAtom>) {
              out.insert(h.target);
              terms(h.args);
            } else if constexpr (std::is_same_v<T, ReturnAtom>) {
              out.insert(h.target);
            } else {
              if (h.lower) CollectVars(*h.lower, out);
              if (h.upper) CollectVars(*h.upper, out);
            }
          },
          *rule.head);
    }
    for (const Literal& lit : rule.body) {
      std::visit(
          [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Atom>) {
              terms(n.args);
            } else if constexpr (std::is_same_v<T, ParamMembership>) {
              out.insert(n.var);
              CollectVars(n.index, out);
            } else if constexpr (std::is_same_v<T, CreationRef>) {
              out.insert(n.var);
              terms(n.args);
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
    return out;
  }

  std::vector<Item> BodyItems(const Rule& rule) {
    std::vector<Item> items;
    const std::set<std::string> globals = GlobalVars(rule);
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
      const Literal& lit = rule.body[i];
      if (lit.negated) continue;
      if (const auto* count = std::get_if<CountAssignment>(&lit.node)) {
        Item it;
        it.kind = Item::Kind::kCount;
        it.count = count;
        it.literal_index = i;
        for (const std::string& v : ElementVars(count->elements)) {
          if (globals.contains(v)) it.needs.insert(v);
        }
        it.needs.erase(count->var);
        items.push_back(std::move(it));
        continue;
      }
      if (std::holds_alternative<Cardinality>(lit.node)) continue;
      std::visit(
          [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Atom> ||
                          std::is_same_v<T, ParamMembership> ||
                          std::is_same_v<T, CreationRef> ||
                          std::is_same_v<T, Comparison>) {
              items.push_back(MakeConditionItem(Condition(n), Role::kBody));
              // MakeConditionItem stores a pointer into the temporary; fix it
              // up to point at the literal node itself.
              Item& it = items.back();
              if constexpr (std::is_same_v<T, Atom>) it.atom = &n;
              if constexpr (std::is_same_v<T, ParamMembership>) it.member = &n;
              if constexpr (std::is_same_v<T, CreationRef>) it.creation = &n;
              if constexpr (std::is_same_v<T, Comparison>) it.compare = &n;
            }
          },
          lit.node);
    }
    return items;
  }

  bool Ready(const Item& it) const {
    for (const std::string& v : it.needs) {
      if (binding_.Get(v) == nullptr) return false;
    }
    return true;
  }

  std::optional<std::size_t> ChooseItem(const std::vector<Item>& items,
                                        const std::vector<char>& done) const {
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (!done[i] && items[i].kind == Item::Kind::kCompare && Ready(items[i])) return i;
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (!done[i] && items[i].kind != Item::Kind::kCompare &&
          items[i].kind != Item::Kind::kCount && Ready(items[i])) {
        return i;
      }
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (!done[i] && items[i].kind == Item::Kind::kCount && Ready(items[i])) return i;
    }
    return std::nullopt;
  }

  // Enumerates every extension of binding_ satisfying all items, calling
  // `emit` once per solution with ctx holding the matched atoms.
  void Enumerate(const std::vector<Item>& items, std::vector<char>& done,
                 std::size_t remaining, const AtomStore& store, Ctx& ctx,
                 const std::function<void()>& emit) {
    if (remaining == 0) {
      emit();
      return;
    }
    std::optional<std::size_t> pick = ChooseItem(items, done);
    if (!pick) Fail("rule cannot be grounded: no safe evaluation order");
    const Item& it = items[*pick];
    done[*pick] = 1;
    const std::size_t mark = binding_.size();
    auto next = [&] { Enumerate(items, done, remaining - 1, store, ctx, emit); };

    switch (it.kind) {
      case Item::Kind::kCompare:
        if (Compare(*it.compare)) next();
        break;
      case Item::Kind::kMember: {
        auto found = members_.find(it.member->param);
        if (found == members_.end()) break;
        for (const ParamMemberFact* f : found->second) {
          if (Match(Term::Var(it.member->var), Value::Object(f->object)) &&
              Match(it.member->index, Value::Int(f->index))) {
            next();
          }
          binding_.Truncate(mark);
        }
        break;
      }
      case Item::Kind::kAtom: {
        const auto& cands = store.Candidates(GroundAtom::Kind::kOrdinary,
                                             it.atom->predicate,
                                             it.atom->args.size());
        const std::size_t n = cands.size();
        for (std::size_t i = 0; i < n; ++i) {
          if (MatchArgs(it.atom->args, cands[i].args)) {
            ctx.matched.emplace_back(it.role, cands[i]);
            next();
            ctx.matched.pop_back();
          }
          binding_.Truncate(mark);
        }
        break;
      }
      case Item::Kind::kCreation: {
        const auto& cands = store.Candidates(GroundAtom::Kind::kNew,
                                             it.creation->class_name,
                                             it.creation->args.size());
        const std::size_t n = cands.size();
        for (std::size_t i = 0; i < n; ++i) {
          if (MatchArgs(it.creation->args, cands[i].args) &&
              Match(Term::Var(it.creation->var),
                    Value::Object(cands[i].CreatedObject()))) {
            ctx.matched.emplace_back(it.role, cands[i]);
            next();
            ctx.matched.pop_back();
          }
          binding_.Truncate(mark);
        }
        break;
      }
      case Item::Kind::kCount: {
        std::vector<ElementLit> lits =
            ExpandElements(it.count->elements, /*template_binds=*/true, store);
        const std::size_t distinct = CountDistinctAtoms(lits);
        for (std::size_t k = 0; k <= distinct; ++k) {
          const auto kv = static_cast<std::int64_t>(k);
          if (Match(Term::Var(it.count->var), Value::Int(kv))) {
            ctx.counts.push_back(CountCard{kv, it.literal_index, lits});
            next();
            ctx.counts.pop_back();
          }
          binding_.Truncate(mark);
        }
        break;
      }
    }
    binding_.Truncate(mark);
    done[*pick] = 0;
  }

  static std::size_t CountDistinctAtoms(const std::vector<ElementLit>& lits) {
    std::unordered_set<GroundAtom, GroundAtomHash> seen;
    for (const ElementLit& l : lits) seen.insert(l.atom);
    return seen.size();
  }

  bool IsCertain(const GroundAtom& a) const {
    return certain_ready_ && certain_.Contains(a);
  }

  // Ground instances of cardinality elements under the current binding.
  std::vector<ElementLit> ExpandElements(const std::vector<CardElement>& elements,
                                         bool template_binds,
                                         const AtomStore& store) {
    std::vector<ElementLit> out;
    for (const CardElement& e : elements) {
      std::vector<Item> items;
      if (template_binds) items.push_back(MakeAtomItem(e.atom, Role::kTemplate));
      for (const Condition& c : e.conditions) {
        items.push_back(MakeConditionItem(c, Role::kCondition));
      }
      std::vector<char> done(items.size(), 0);
      Ctx ctx;
      Enumerate(items, done, items.size(), store, ctx, [&] {
        ElementLit lit;
        bool have_template = false;
        for (const auto& [role, atom] : ctx.matched) {
          if (role == Role::kTemplate) {
            lit.atom = atom;
            have_template = true;
          } else if (role == Role::kCondition && !IsCertain(atom)) {
            lit.conds.push_back(atom);
          }
        }
        if (!have_template) {
          lit.atom = GroundAtom::Ordinary(e.atom.predicate, EvalAll(e.atom.args));
        }
        out.push_back(std::move(lit));
      });
    }
    return out;
  }

  // ------------------------------------------------------------ heads

  GroundAtom HeadAtom(const Head& head) const {
    return std::visit(
        [&](const auto& h) -> GroundAtom {
          using T = std::decay_t<decltype(h)>;
          if constexpr (std::is_same_v<T, Atom>) {
            return GroundAtom::Ordinary(h.predicate, EvalAll(h.args));
          } else if constexpr (std::is_same_v<T, NewAtom>) {
            std::vector<Value> args = EvalAll(h.args);
            for (const Value& v : args) {
              if (v.is_object() && v.as_object().is_created()) {
                Fail("nested construction: new " + h.class_name +
                     " applied to created object " + v.ToString());
              }
            }
            return GroundAtom::New(h.class_name, std::move(args));
          } else if constexpr (std::is_same_v<T, ExeAtom>) {
            Value target = Eval(Term::Var(h.target));
            if (!target.is_object()) {
              Fail("exe target " + h.target + "? is not an object");
            }
            return GroundAtom::Exe(h.stage, target.as_object(), h.method,
                                   EvalAll(h.args));
          } else if constexpr (std::is_same_v<T, ReturnAtom>) {
            Value target = Eval(Term::Var(h.target));
            if (!target.is_object()) {
              Fail("return target " + h.target + "? is not an object");
            }
            return GroundAtom::Return(target.as_object());
          } else {
            Fail("cardinality head has no single atom");
          }
        },
        head);
  }

  // ------------------------------------------------------------ phase 1

  void ComputePossible() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t r = 0; r < spec_.rules.size(); ++r) {
        const Rule& rule = spec_.rules[r];
        where_ = rule.where;
        if (!rule.head) continue;
        std::vector<GroundAtom> pending;
        std::vector<Item> items = BodyItems(rule);
        std::vector<char> done(items.size(), 0);
        Ctx ctx;
        Enumerate(items, done, items.size(), possible_, ctx, [&] {
          if (const auto* choice = std::get_if<Cardinality>(&*rule.head)) {
            for (ElementLit& l : ExpandElements(choice->elements, false, possible_)) {
              pending.push_back(std::move(l.atom));
            }
          } else {
            pending.push_back(HeadAtom(*rule.head));
          }
        });
        for (const GroundAtom& a : pending) changed |= possible_.Add(a);
      }
    }
  }

  // ------------------------------------------------------------ phase 2

  bool NegativesHoldCertainly(const Rule& rule) const {
    for (const Literal& lit : rule.body) {
      if (!lit.negated) continue;
      bool holds = std::visit(
          [&](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Atom>) {
              return !possible_.Contains(
                  GroundAtom::Ordinary(n.predicate, EvalAll(n.args)));
            } else if constexpr (std::is_same_v<T, ParamMembership>) {
              return !MemberHolds(n);
            } else if constexpr (std::is_same_v<T, CreationRef>) {
              GroundAtom created = GroundAtom::New(n.class_name, EvalAll(n.args));
              Value v = Eval(Term::Var(n.var));
              if (!(v == Value::Object(created.CreatedObject()))) return true;
              return !possible_.Contains(created);
            } else {
              return false;
            }
          },
          lit.node);
      if (!holds) return false;
    }
    return true;
  }

  void ComputeCertain() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Rule& rule : spec_.rules) {
        where_ = rule.where;
        if (!rule.head) continue;
        if (!std::holds_alternative<Atom>(*rule.head) &&
            !std::holds_alternative<NewAtom>(*rule.head)) {
          continue;
        }
        bool definite = true;
        for (const Literal& lit : rule.body) {
          if (std::holds_alternative<Cardinality>(lit.node) ||
              std::holds_alternative<CountAssignment>(lit.node)) {
            definite = false;
          }
        }
        if (!definite) continue;
        std::vector<GroundAtom> pending;
        std::vector<Item> items = BodyItems(rule);
        std::vector<char> done(items.size(), 0);
        Ctx ctx;
        Enumerate(items, done, items.size(), certain_, ctx, [&] {
          if (NegativesHoldCertainly(rule)) pending.push_back(HeadAtom(*rule.head));
        });
        for (const GroundAtom& a : pending) changed |= certain_.Add(a);
      }
    }
    certain_ready_ = true;
  }

  // ------------------------------------------------------------ phase 3

  // Maps element instances to cardinality literals: the element atom itself
  // when some instance has no open condition, otherwise an auxiliary atom
  // defined by one rule per condition conjunction.
  std::vector<AtomId> CardLiterals(const std::vector<ElementLit>& lits,
                                   const std::string& key) {
    std::vector<GroundAtom> order;
    std::unordered_map<GroundAtom, std::vector<const ElementLit*>, GroundAtomHash> groups;
    for (const ElementLit& l : lits) {
      auto [it, inserted] = groups.try_emplace(l.atom);
      if (inserted) order.push_back(l.atom);
      it->second.push_back(&l);
    }
    std::vector<AtomId> out;
    for (const GroundAtom& atom : order) {
      const auto& group = groups[atom];
      bool unconditional = false;
      for (const ElementLit* l : group) unconditional |= l->conds.empty();
      if (unconditional) {
        out.push_back(program_.Intern(atom));
        continue;
      }
      AtomId aux = program_.Intern(
          GroundAtom::Ordinary("_aux" + key + "_" + atom.name, atom.args));
      AtomId base = program_.Intern(atom);
      for (const ElementLit* l : group) {
        std::vector<AtomId> body{base};
        for (const GroundAtom& c : l->conds) body.push_back(program_.Intern(c));
        AddRule(GroundRule::Normal(aux, std::move(body)));
      }
      out.push_back(aux);
    }
    return out;
  }

  // Simplifies a ground cardinality; returns false if it can never hold.
  static bool Normalize(GroundCardinality& card, bool& trivially_true) {
    const auto n = static_cast<std::int64_t>(card.literals.size());
    const std::int64_t lower = card.lower_or_zero();
    trivially_true = false;
    if (lower > n) return false;
    if (card.upper && (*card.upper < 0 || lower > *card.upper)) return false;
    if (lower <= 0 && (!card.upper || *card.upper >= n)) trivially_true = true;
    return true;
  }

  static std::string RuleKey(const GroundRule& r) {
    std::string key = std::to_string(static_cast<int>(r.head_kind)) + "|" +
                      std::to_string(r.head) + "|";
    auto ids = [&](const std::vector<AtomId>& v) {
      for (AtomId a : v) key += std::to_string(a) + ",";
      key += "|";
    };
    auto card = [&](const GroundCardinality& c) {
      key += (c.lower ? std::to_string(*c.lower) : "-") + ":" +
             (c.upper ? std::to_string(*c.upper) : "-") + ":";
      ids(c.literals);
    };
    if (r.is_choice()) card(r.choice);
    ids(r.body_pos);
    ids(r.body_neg);
    for (const GroundCardinality& c : r.body_card) card(c);
    return key;
  }

  void AddRule(GroundRule rule) {
    auto dedupe = [](std::vector<AtomId>& v) {
      std::vector<AtomId> out;
      for (AtomId a : v) {
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
      }
      v = std::move(out);
    };
    dedupe(rule.body_pos);
    dedupe(rule.body_neg);
    if (emitted_.insert(RuleKey(rule)).second) program_.AddRule(std::move(rule));
  }

  void EmitInstance(const Rule& rule, std::size_t rule_index, const Ctx& ctx) {
    GroundRule out;
    const std::string rkey = std::to_string(rule_index);

    // Head atoms are interned before body atoms.
    std::vector<GroundRule> choice_rules;
    if (rule.head) {
      if (const auto* choice = std::get_if<Cardinality>(&*rule.head)) {
        std::vector<ElementLit> lits =
            ExpandElements(choice->elements, /*template_binds=*/false, possible_);
        for (const ElementLit& l : lits) {
          if (!l.conds.empty()) {
            Fail("choice element condition " + l.conds.front().ToString() +
                 " is not fixed by facts");
          }
        }
        GroundCardinality bounds;
        if (choice->lower) bounds.lower = EvalInt(*choice->lower);
        if (choice->upper) bounds.upper = EvalInt(*choice->upper);
        bool schema = rule.body.empty();
        if (schema) {
          schema = false;
          for (const CardElement& e : choice->elements) {
            schema |= HasVariables(e.atom.args);
          }
        }
        std::vector<AtomId> ids;
        for (const ElementLit& l : lits) {
          AtomId id = program_.Intern(l.atom);
          if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
        }
        if (schema) {
          for (AtomId id : ids) {
            GroundCardinality c = bounds;
            c.literals = {id};
            choice_rules.push_back(GroundRule::Choice(std::move(c)));
          }
        } else {
          GroundCardinality c = bounds;
          c.literals = std::move(ids);
          choice_rules.push_back(GroundRule::Choice(std::move(c)));
        }
      } else {
        out.head_kind = GroundRule::HeadKind::kAtom;
        out.head = program_.Intern(HeadAtom(*rule.head));
      }
    }

    for (const auto& [role, atom] : ctx.matched) {
      if (role == Role::kBody) out.body_pos.push_back(program_.Intern(atom));
    }

    for (std::size_t i = 0; i < rule.body.size(); ++i) {
      const Literal& lit = rule.body[i];
      if (lit.negated) {
        bool prune = false;
        std::visit(
            [&](const auto& n) {
              using T = std::decay_t<decltype(n)>;
              if constexpr (std::is_same_v<T, Atom>) {
                GroundAtom a = GroundAtom::Ordinary(n.predicate, EvalAll(n.args));
                if (possible_.Contains(a)) out.body_neg.push_back(program_.Intern(a));
              } else if constexpr (std::is_same_v<T, ParamMembership>) {
                prune = MemberHolds(n);
              } else if constexpr (std::is_same_v<T, CreationRef>) {
                GroundAtom created = GroundAtom::New(n.class_name, EvalAll(n.args));
                Value v = Eval(Term::Var(n.var));
                if (v == Value::Object(created.CreatedObject()) &&
                    possible_.Contains(created)) {
                  out.body_neg.push_back(program_.Intern(created));
                }
              }
            },
            lit.node);
        if (prune) return;
        continue;
      }
      if (const auto* card = std::get_if<Cardinality>(&lit.node)) {
        GroundCardinality g;
        if (card->lower) g.lower = EvalInt(*card->lower);
        if (card->upper) g.upper = EvalInt(*card->upper);
        g.literals = CardLiterals(
            ExpandElements(card->elements, /*template_binds=*/true, possible_),
            rkey + "_" + std::to_string(i));
        bool trivially_true = false;
        if (!Normalize(g, trivially_true)) return;
        if (!trivially_true) out.body_card.push_back(std::move(g));
      }
    }
    for (const CountCard& count : ctx.counts) {
      GroundCardinality g;
      g.lower = count.k;
      g.upper = count.k;
      g.literals = CardLiterals(count.lits,
                                rkey + "_" + std::to_string(count.literal_index));
      bool trivially_true = false;
      if (!Normalize(g, trivially_true)) return;
      if (!trivially_true) out.body_card.push_back(std::move(g));
    }

    if (!choice_rules.empty() || (rule.head && std::holds_alternative<Cardinality>(*rule.head))) {
      for (GroundRule& c : choice_rules) {
        c.body_pos = out.body_pos;
        c.body_neg = out.body_neg;
        c.body_card = out.body_card;
        AddRule(std::move(c));
      }
      return;
    }
    AddRule(std::move(out));
  }

  void EmitAll() {
    for (std::size_t r = 0; r < spec_.rules.size(); ++r) {
      const Rule& rule = spec_.rules[r];
      where_ = rule.where;
      std::vector<Item> items = BodyItems(rule);
      std::vector<char> done(items.size(), 0);
      Ctx ctx;
      Enumerate(items, done, items.size(), possible_, ctx,
                [&] { EmitInstance(rule, r, ctx); });
    }
    if (spec_.minimize) {
      where_ = {};
      program_.set_has_minimize(true);
      std::vector<ElementLit> lits =
          ExpandElements(spec_.minimize->elements, /*template_binds=*/true, possible_);
      for (AtomId id : CardLiterals(lits, "m")) program_.AddMinimize(id);
    }
  }

  const SpecProgram& spec_;
  const FactBase& facts_;
  std::map<std::string, std::vector<const ParamMemberFact*>> members_;
  std::map<std::pair<ObjectId, std::string>, std::int64_t> method_values_;

  Binding binding_;
  AtomStore possible_;
  AtomStore certain_;
  bool certain_ready_ = false;
  SourceLocation where_;

  GroundProgram program_;
  std::unordered_set<std::string> emitted_;
};

}  // namespace

GroundProgram Ground(const SpecProgram& spec, const FactBase& facts,
                     const ObjectUniverse& /*universe*/) {
  return Instantiator(spec, facts).Run();
}

}  // namespace ospec
