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

#include "ospec/solver.h"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ospec {

bool AnswerSet::Contains(AtomId id) const {
  return std::binary_search(atoms.begin(), atoms.end(), id);
}

bool EvaluateCardinality(const GroundCardinality& card,
                         const std::vector<bool>& truth) {
  std::int64_t count = 0;
  for (AtomId a : card.literals) count += truth[a] ? 1 : 0;
  if (count < card.lower_or_zero()) return false;
  return !card.upper || count <= *card.upper;
}

std::int64_t Cost(const GroundProgram& program, const std::vector<bool>& truth) {
  std::int64_t cost = 0;
  for (AtomId a : program.minimize()) cost += truth[a] ? 1 : 0;
  return cost;
}

namespace {

bool BodyHolds(const GroundRule& r, const std::vector<bool>& truth) {
  for (AtomId a : r.body_pos) {
    if (!truth[a]) return false;
  }
  for (AtomId a : r.body_neg) {
    if (truth[a]) return false;
  }
  for (const GroundCardinality& c : r.body_card) {
    if (!EvaluateCardinality(c, truth)) return false;
  }
  return true;
}

std::vector<bool> ToTruth(const GroundProgram& program,
                          const std::vector<AtomId>& atoms) {
  std::vector<bool> truth(program.atom_count(), false);
  for (AtomId a : atoms) {
    if (a < truth.size()) truth[a] = true;
  }
  return truth;
}

std::vector<AtomId> ToAtoms(const std::vector<bool>& truth) {
  std::vector<AtomId> out;
  for (AtomId a = 0; a < truth.size(); ++a) {
    if (truth[a]) out.push_back(a);
  }
  return out;
}

}  // namespace

bool IsStableModel(const GroundProgram& program, const std::vector<bool>& truth) {
  // The candidate must be a model.
  for (const GroundRule& r : program.rules()) {
    if (!BodyHolds(r, truth)) continue;
    switch (r.head_kind) {
      case GroundRule::HeadKind::kNone: return false;
      case GroundRule::HeadKind::kAtom:
        if (!truth[r.head]) return false;
        break;
      case GroundRule::HeadKind::kChoice:
        if (!EvaluateCardinality(r.choice, truth)) return false;
        break;
    }
  }

  // Least model of the reduct. Rules blocked by negation or by a violated
  // upper bound are dropped; body cardinalities keep their lower bound.
  std::vector<const GroundRule*> reduct;
  for (const GroundRule& r : program.rules()) {
    if (r.is_constraint()) continue;
    bool keep = true;
    for (AtomId a : r.body_neg) keep &= !truth[a];
    for (const GroundCardinality& c : r.body_card) {
      if (!c.upper) continue;
      std::int64_t count = 0;
      for (AtomId a : c.literals) count += truth[a] ? 1 : 0;
      keep &= count <= *c.upper;
    }
    if (keep) reduct.push_back(&r);
  }
  std::vector<bool> least(truth.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const GroundRule* r : reduct) {
      bool fires = true;
      for (AtomId a : r->body_pos) fires &= static_cast<bool>(least[a]);
      for (const GroundCardinality& c : r->body_card) {
        if (!fires) break;
        std::int64_t count = 0;
        for (AtomId a : c.literals) count += least[a] ? 1 : 0;
        fires = count >= c.lower_or_zero();
      }
      if (!fires) continue;
      auto derive = [&](AtomId a) {
        if (!least[a]) {
          least[a] = true;
          changed = true;
        }
      };
      if (r->head_kind == GroundRule::HeadKind::kAtom) {
        derive(r->head);
      } else {
        for (AtomId a : r->choice.literals) {
          if (truth[a]) derive(a);
        }
      }
    }
  }
  return least == truth;
}

bool IsStableModel(const GroundProgram& program,
                   const std::vector<AtomId>& candidate) {
  for (AtomId a : candidate) {
    if (a >= program.atom_count()) return false;
  }
  return IsStableModel(program, ToTruth(program, candidate));
}

std::vector<AnswerSet> BruteForceModels(const GroundProgram& program,
                                        std::size_t cap) {
  const std::size_t n = program.atom_count();
  if (n > cap) {
    throw std::length_error("brute force limited to " + std::to_string(cap) +
                            " atoms, program has " + std::to_string(n));
  }
  std::vector<AnswerSet> out;
  std::vector<bool> truth(n, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) truth[i] = (mask >> i) & 1U;
    if (IsStableModel(program, truth)) {
      out.push_back(AnswerSet{ToAtoms(truth), Cost(program, truth)});
    }
  }
  std::sort(out.begin(), out.end(), BitvectorLess);
  return out;
}

bool BitvectorLess(const AnswerSet& a, const AnswerSet& b) {
  const std::size_t n = std::min(a.atoms.size(), b.atoms.size());
  for (std::size_t i = 0; i < n; ++i) {
    // The set holding the smaller differing atom has a 1 where the other
    // has a 0.
    if (a.atoms[i] != b.atoms[i]) return a.atoms[i] > b.atoms[i];
  }
  return a.atoms.size() < b.atoms.size();
}

namespace {

constexpr std::int8_t kUnknown = -1;
constexpr std::int8_t kFalse = 0;
constexpr std::int8_t kTrue = 1;

enum class Status { kFalse, kTrue, kOpen };

class Search {
 public:
  explicit Search(const SolveRequest& request)
      : program_(request.program),
        trace_(request.trace),
        value_(request.program.atom_count(), kUnknown),
        supporters_(request.program.atom_count()),
        is_minimize_(request.program.atom_count(), false) {
    const auto& rules = program_.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const GroundRule& r = rules[i];
      if (r.head_kind == GroundRule::HeadKind::kAtom) {
        supporters_[r.head].push_back(i);
      } else if (r.is_choice()) {
        for (AtomId a : r.choice.literals) supporters_[a].push_back(i);
      }
    }
    for (AtomId a : program_.minimize()) is_minimize_[a] = true;
  }

  // Collects models whose cost does not exceed `cost_limit` (all models
  // when absent), stopping after `limit` models when limit > 0.
  std::vector<AnswerSet> Collect(std::optional<std::int64_t> cost_limit,
                                 std::size_t limit) {
    mode_ = Mode::kCollect;
    cost_limit_ = cost_limit;
    limit_ = limit;
    models_.clear();
    Reset();
    Run();
    return std::move(models_);
  }

  // Cost of the cheapest model, or nullopt when there is none.
  std::optional<std::int64_t> MinimumCost() {
    mode_ = Mode::kMinimize;
    best_.reset();
    cost_limit_.reset();
    Reset();
    Run();
    return best_;
  }

 private:
  enum class Mode { kCollect, kMinimize };

  void Reset() {
    std::fill(value_.begin(), value_.end(), kUnknown);
    trail_.clear();
    true_cost_ = 0;
    stop_ = false;
  }

  // ---------------------------------------------------------------- trail

  bool Assign(AtomId a, std::int8_t v) {
    if (value_[a] == v) return true;
    if (value_[a] != kUnknown) return false;
    value_[a] = v;
    trail_.push_back(a);
    if (v == kTrue && is_minimize_[a]) ++true_cost_;
    changed_ = true;
    return true;
  }

  void Undo(std::size_t mark) {
    while (trail_.size() > mark) {
      AtomId a = trail_.back();
      trail_.pop_back();
      if (value_[a] == kTrue && is_minimize_[a]) --true_cost_;
      value_[a] = kUnknown;
    }
  }

  // ------------------------------------------------------------ evaluation

  struct Counts {
    std::int64_t t = 0;
    std::int64_t u = 0;
  };

  Counts Count(const std::vector<AtomId>& lits) const {
    Counts c;
    for (AtomId a : lits) {
      if (value_[a] == kTrue) ++c.t;
      else if (value_[a] == kUnknown) ++c.u;
    }
    return c;
  }

  Status CardStatus(const GroundCardinality& card) const {
    Counts c = Count(card.literals);
    const std::int64_t lower = card.lower_or_zero();
    if (c.t + c.u < lower) return Status::kFalse;
    if (card.upper && c.t > *card.upper) return Status::kFalse;
    if (c.t >= lower && (!card.upper || c.t + c.u <= *card.upper)) return Status::kTrue;
    return Status::kOpen;
  }

  Status BodyStatus(const GroundRule& r) const {
    bool open = false;
    for (AtomId a : r.body_pos) {
      if (value_[a] == kFalse) return Status::kFalse;
      open |= value_[a] == kUnknown;
    }
    for (AtomId a : r.body_neg) {
      if (value_[a] == kTrue) return Status::kFalse;
      open |= value_[a] == kUnknown;
    }
    for (const GroundCardinality& c : r.body_card) {
      Status s = CardStatus(c);
      if (s == Status::kFalse) return Status::kFalse;
      open |= s == Status::kOpen;
    }
    return open ? Status::kOpen : Status::kTrue;
  }

  // Forces `card` true (want=true) or false (want=false) where that is
  // decided by the counts alone.
  bool ForceCard(const GroundCardinality& card, bool want) {
    Counts c = Count(card.literals);
    const std::int64_t lower = card.lower_or_zero();
    if (want) {
      if (c.t + c.u < lower || (card.upper && c.t > *card.upper)) return false;
      if (c.u == 0) return true;
      if (c.t + c.u == lower) return SetOpen(card.literals, kTrue);
      if (card.upper && c.t == *card.upper) return SetOpen(card.literals, kFalse);
      return true;
    }
    // Only a pure lower bound can be falsified without a disjunction.
    const auto n = static_cast<std::int64_t>(card.literals.size());
    if (!card.upper || *card.upper >= n) {
      if (c.t >= lower) return false;
      if (c.t == lower - 1) return SetOpen(card.literals, kFalse);
    }
    return true;
  }

  bool SetOpen(const std::vector<AtomId>& lits, std::int8_t v) {
    for (AtomId a : lits) {
      if (value_[a] == kUnknown && !Assign(a, v)) return false;
    }
    return true;
  }

  // Makes every literal of the body true.
  bool ForceBody(const GroundRule& r) {
    for (AtomId a : r.body_pos) {
      if (!Assign(a, kTrue)) return false;
    }
    for (AtomId a : r.body_neg) {
      if (!Assign(a, kFalse)) return false;
    }
    for (const GroundCardinality& c : r.body_card) {
      if (!ForceCard(c, true)) return false;
    }
    return true;
  }

  // The body must not hold; if exactly one literal is open, falsify it.
  bool BlockBody(const GroundRule& r) {
    int open = 0;
    int kind = 0;  // 1 pos, 2 neg, 3 card
    std::size_t which = 0;
    for (std::size_t i = 0; i < r.body_pos.size(); ++i) {
      if (value_[r.body_pos[i]] == kUnknown) {
        ++open;
        kind = 1;
        which = i;
      }
    }
    for (std::size_t i = 0; i < r.body_neg.size(); ++i) {
      if (value_[r.body_neg[i]] == kUnknown) {
        ++open;
        kind = 2;
        which = i;
      }
    }
    for (std::size_t i = 0; i < r.body_card.size(); ++i) {
      if (CardStatus(r.body_card[i]) == Status::kOpen) {
        ++open;
        kind = 3;
        which = i;
      }
    }
    if (open == 0) return false;
    if (open > 1) return true;
    switch (kind) {
      case 1: return Assign(r.body_pos[which], kFalse);
      case 2: return Assign(r.body_neg[which], kTrue);
      default: return ForceCard(r.body_card[which], false);
    }
  }

  bool PropagateRules() {
    for (const GroundRule& r : program_.rules()) {
      Status body = BodyStatus(r);
      if (body == Status::kFalse) continue;
      switch (r.head_kind) {
        case GroundRule::HeadKind::kNone:
          if (body == Status::kTrue) return false;
          if (!BlockBody(r)) return false;
          break;
        case GroundRule::HeadKind::kAtom:
          if (body == Status::kTrue) {
            if (!Assign(r.head, kTrue)) return false;
          } else if (value_[r.head] == kFalse) {
            if (!BlockBody(r)) return false;
          }
          break;
        case GroundRule::HeadKind::kChoice: {
          Counts c = Count(r.choice.literals);
          const std::int64_t lower = r.choice.lower_or_zero();
          const bool violated =
              c.t + c.u < lower || (r.choice.upper && c.t > *r.choice.upper);
          if (body == Status::kTrue) {
            if (violated) return false;
            if (c.u > 0 && c.t + c.u == lower) {
              if (!SetOpen(r.choice.literals, kTrue)) return false;
            } else if (c.u > 0 && r.choice.upper && c.t == *r.choice.upper) {
              if (!SetOpen(r.choice.literals, kFalse)) return false;
            }
          } else if (violated) {
            if (!BlockBody(r)) return false;
          }
          break;
        }
      }
    }
    return true;
  }

  // Atoms with no possible well-founded derivation are false: the least
  // fixpoint of the rules under the most optimistic reading of open atoms.
  bool PropagateUnfounded() {
    const std::size_t n = value_.size();
    possible_.assign(n, false);
    const auto& rules = program_.rules();
    std::vector<char> fired(rules.size(), 0);
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < rules.size(); ++i) {
        const GroundRule& r = rules[i];
        if (fired[i] || r.is_constraint()) continue;
        if (!MayFire(r)) continue;
        fired[i] = 1;
        auto mark = [&](AtomId a) {
          if (!possible_[a] && value_[a] != kFalse) {
            possible_[a] = true;
            grew = true;
          }
        };
        if (r.head_kind == GroundRule::HeadKind::kAtom) {
          mark(r.head);
        } else {
          for (AtomId a : r.choice.literals) mark(a);
        }
      }
    }
    for (AtomId a = 0; a < n; ++a) {
      if (possible_[a]) continue;
      if (!Assign(a, kFalse)) return false;
    }
    return true;
  }

  bool MayFire(const GroundRule& r) const {
    for (AtomId a : r.body_pos) {
      if (!possible_[a]) return false;
    }
    for (AtomId a : r.body_neg) {
      if (value_[a] == kTrue) return false;
    }
    for (const GroundCardinality& c : r.body_card) {
      std::int64_t may = 0;
      std::int64_t must = 0;
      for (AtomId a : c.literals) {
        may += possible_[a] ? 1 : 0;
        must += value_[a] == kTrue ? 1 : 0;
      }
      if (may < c.lower_or_zero()) return false;
      if (c.upper && must > *c.upper) return false;
    }
    return true;
  }

  // A true atom with a single rule that can still support it needs that
  // rule's body.
  bool PropagateSupport() {
    const auto& rules = program_.rules();
    for (AtomId a = 0; a < value_.size(); ++a) {
      if (value_[a] != kTrue) continue;
      const GroundRule* only = nullptr;
      int candidates = 0;
      for (std::size_t i : supporters_[a]) {
        if (BodyStatus(rules[i]) == Status::kFalse) continue;
        ++candidates;
        only = &rules[i];
        if (candidates > 1) break;
      }
      if (candidates == 0) return false;
      if (candidates == 1 && !ForceBody(*only)) return false;
    }
    return true;
  }

  bool Propagate() {
    do {
      changed_ = false;
      if (!PropagateRules()) return false;
      if (changed_) continue;
      if (!PropagateSupport()) return false;
      if (changed_) continue;
      if (!PropagateUnfounded()) return false;
    } while (changed_);
    return true;
  }

  // --------------------------------------------------------------- search

  bool Pruned() const {
    if (mode_ == Mode::kMinimize) return best_ && true_cost_ >= *best_;
    return cost_limit_ && true_cost_ > *cost_limit_;
  }

  void Run() {
    if (!Propagate() || Pruned()) {
      Trace("conflict at root");
      return;
    }
    Dfs(0);
  }

  void Dfs(int depth) {
    if (stop_) return;
    AtomId pick = 0;
    while (pick < value_.size() && value_[pick] != kUnknown) ++pick;
    if (pick == value_.size()) {
      Leaf();
      return;
    }
    for (std::int8_t v : {kFalse, kTrue}) {
      const std::size_t mark = trail_.size();
      if (trace_ != nullptr) {
        *trace_ << std::string(static_cast<std::size_t>(depth) * 2, ' ')
                << "decide " << program_.atom(pick).ToString() << " = "
                << (v == kTrue ? "true" : "false") << "\n";
      }
      Assign(pick, v);
      if (Propagate() && !Pruned()) {
        Dfs(depth + 1);
      } else {
        Trace("conflict");
      }
      Undo(mark);
      if (stop_) return;
    }
  }

  void Leaf() {
    std::vector<bool> truth(value_.size());
    for (std::size_t i = 0; i < value_.size(); ++i) truth[i] = value_[i] == kTrue;
    if (!IsStableModel(program_, truth)) {
      Trace("leaf rejected by stability check");
      return;
    }
    const std::int64_t cost = Cost(program_, truth);
    if (mode_ == Mode::kMinimize) {
      if (!best_ || cost < *best_) best_ = cost;
      Trace("model with cost " + std::to_string(cost));
      return;
    }
    Trace("model");
    models_.push_back(AnswerSet{ToAtoms(truth), cost});
    if (limit_ > 0 && models_.size() >= limit_) stop_ = true;
  }

  void Trace(const std::string& line) {
    if (trace_ != nullptr) *trace_ << line << "\n";
  }

  const GroundProgram& program_;
  std::ostream* trace_;
  std::vector<std::int8_t> value_;
  std::vector<std::vector<std::size_t>> supporters_;
  std::vector<bool> is_minimize_;
  std::vector<bool> possible_;
  std::vector<AtomId> trail_;
  std::int64_t true_cost_ = 0;
  bool changed_ = false;
  bool stop_ = false;

  Mode mode_ = Mode::kCollect;
  std::optional<std::int64_t> cost_limit_;
  std::optional<std::int64_t> best_;
  std::size_t limit_ = 0;
  std::vector<AnswerSet> models_;
};

}  // namespace

std::vector<AnswerSet> Enumerate(const SolveRequest& request) {
  Search search(request);
  if (!request.optimize || !request.program.has_minimize()) {
    return search.Collect(std::nullopt, request.count);
  }
  std::optional<std::int64_t> best = search.MinimumCost();
  if (!best) return {};
  return search.Collect(best, request.count);
}

}  // namespace ospec
