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

#include "support.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ospec/documents.h"
#include "ospec/parser.h"

namespace ospec::testing {

std::string SourcePath(std::string_view relative) {
  return std::string(OSPEC_SOURCE_DIR) + "/" + std::string(relative);
}

std::string ReadSource(std::string_view relative) {
  std::ifstream in(SourcePath(relative), std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + SourcePath(relative));
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

GroundProgram ToyProgram() {
  GroundProgram p;
  const std::vector<Value> o{Value::Sym("o")};
  AtomId a = p.Intern(GroundAtom::Ordinary("a", o));
  AtomId b = p.Intern(GroundAtom::Ordinary("b", o));
  AtomId c = p.Intern(GroundAtom::Ordinary("c", o));
  p.AddRule(GroundRule::Normal(a, {}, {b}));
  p.AddRule(GroundRule::Normal(b, {}, {a}));
  p.AddRule(GroundRule::Fact(c));
  return p;
}

AtomId ToyAtom(const GroundProgram& program, const std::string& predicate) {
  return *program.Find(GroundAtom::Ordinary(predicate, {Value::Sym("o")}));
}

std::vector<std::string> Render(const GroundProgram& program,
                                const std::vector<AnswerSet>& models) {
  std::vector<std::string> out;
  for (const AnswerSet& m : models) {
    std::string s = "{";
    for (std::size_t i = 0; i < m.atoms.size(); ++i) {
      if (i > 0) s += ", ";
      s += program.atom(m.atoms[i]).ToString();
    }
    out.push_back(s + "}");
  }
  return out;
}

Pipeline RunPipeline(std::string_view spec_source, std::string_view universe_json) {
  Pipeline p;
  p.spec = ParseSpec(spec_source);
  p.log = std::make_shared<CallLog>();
  p.registry = MakeRecordRegistry(p.spec, p.log);
  p.prepared = Prepare(p.spec, ReadUniverse(universe_json, p.spec), p.registry);
  return p;
}

GroundProgram RandomProgram(std::mt19937_64& rng, const RandomProgramShape& shape) {
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  GroundProgram p;
  const int n = uniform(1, shape.max_atoms);
  std::vector<AtomId> atoms;
  for (int i = 0; i < n; ++i) {
    atoms.push_back(p.Intern(GroundAtom::Ordinary("q", {Value::Int(i)})));
  }
  auto pick = [&] { return atoms[static_cast<std::size_t>(uniform(0, n - 1))]; };
  auto subset = [&](int lo, int hi) {
    std::vector<AtomId> out;
    const int k = uniform(lo, std::min(hi, n));
    while (static_cast<int>(out.size()) < k) {
      AtomId a = pick();
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    return out;
  };
  auto bounds = [&](GroundCardinality& c) {
    const int size = static_cast<int>(c.literals.size());
    if (uniform(0, 3) > 0) c.lower = uniform(0, size);
    if (uniform(0, 2) == 0) c.upper = uniform(c.lower.value_or(0), size);
  };

  int cards_left = uniform(0, shape.max_cards);
  const int rules = uniform(0, shape.max_rules);
  for (int r = 0; r < rules; ++r) {
    GroundRule rule;
    const int kind = uniform(0, 9);
    if (kind < 5) {
      rule.head_kind = GroundRule::HeadKind::kAtom;
      rule.head = pick();
    } else if (kind < 6) {
      rule.head_kind = GroundRule::HeadKind::kNone;
    } else {
      rule.head_kind = GroundRule::HeadKind::kChoice;
      rule.choice.literals = subset(1, 3);
      if (uniform(0, 1) == 0) bounds(rule.choice);
    }
    if (!rule.is_choice() || uniform(0, 1) == 0) {
      rule.body_pos = subset(0, 2);
      rule.body_neg = subset(0, 2);
    }
    if (cards_left > 0 && uniform(0, 2) == 0) {
      GroundCardinality c;
      c.literals = subset(1, 4);
      bounds(c);
      rule.body_card.push_back(std::move(c));
      --cards_left;
    }
    if (rule.is_constraint() && rule.body_pos.empty() && rule.body_neg.empty() &&
        rule.body_card.empty()) {
      rule.body_neg.push_back(pick());
    }
    p.AddRule(std::move(rule));
  }
  return p;
}

std::vector<GroundAtom> RandomPlanAtoms(std::mt19937_64& rng, int params) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<ObjectId> objects;
  for (int i = 0; i < params; ++i) objects.push_back(ObjectId::Param(i));
  std::vector<GroundAtom> atoms;
  const int boxes = uniform(0, 4);
  for (int i = 0; i < boxes; ++i) {
    atoms.push_back(GroundAtom::New(
        "Box", {Value::Int(i), Value::Object(ObjectId::Param(uniform(0, params - 1)))}));
    objects.push_back(atoms.back().CreatedObject());
  }
  auto any = [&] {
    return objects[static_cast<std::size_t>(uniform(0, static_cast<int>(objects.size()) - 1))];
  };
  const int calls = uniform(0, 8);
  for (int i = 0; i < calls; ++i) {
    atoms.push_back(
        GroundAtom::Exe(uniform(0, 2), any(), "m", {Value::Int(i), Value::Object(any())}));
  }
  atoms.push_back(GroundAtom::Return(any()));
  std::shuffle(atoms.begin(), atoms.end(), rng);
  return atoms;
}

namespace {

bool SameHost(const HostValue& host, const Value& value, const Solution& s) {
  if (value.is_int()) {
    const auto* i = std::get_if<std::int64_t>(&host);
    return i != nullptr && *i == value.as_int();
  }
  if (value.is_symbol()) {
    const auto* sym = std::get_if<Symbol>(&host);
    return sym != nullptr && *sym == value.as_symbol();
  }
  const auto* ref = std::get_if<HostRef>(&host);
  auto it = s.objects.find(value.as_object());
  return ref != nullptr && it != s.objects.end() && *ref == it->second;
}

bool SameArgs(const std::vector<HostValue>& hosts, const std::vector<Value>& values,
              const Solution& s) {
  if (hosts.size() != values.size()) return false;
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    if (!SameHost(hosts[i], values[i], s)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> ExecutionViolations(const Solution& s, const CallLog& log) {
  std::vector<std::string> out;
  const ConstructionPlan& plan = s.plan;
  const std::size_t expected = plan.creations.size() + plan.invocations.size();
  if (log.entries.size() != expected) {
    out.push_back("log has " + std::to_string(log.entries.size()) + " entries, plan has " +
                  std::to_string(expected));
    return out;
  }
  for (std::size_t i = 0; i < plan.creations.size(); ++i) {
    const CallLog::Entry& e = log.entries[i];
    const Creation& c = plan.creations[i];
    auto it = s.objects.find(c.id);
    if (!e.is_construction || e.class_name != c.class_name || it == s.objects.end() ||
        !(e.object == it->second) || !SameArgs(e.args, c.args, s)) {
      out.push_back("log entry " + std::to_string(i) + " does not match " + ToString(c));
    }
  }
  for (std::size_t i = 0; i < plan.invocations.size(); ++i) {
    const CallLog::Entry& e = log.entries[plan.creations.size() + i];
    const Invocation& inv = plan.invocations[i];
    auto it = s.objects.find(inv.target);
    if (e.is_construction || e.method != inv.method || it == s.objects.end() ||
        !(e.object == it->second) || !SameArgs(e.args, inv.args, s)) {
      out.push_back("log entry " + std::to_string(plan.creations.size() + i) +
                    " does not match " + ToString(inv));
    }
    if (i > 0 && plan.invocations[i - 1].stage > inv.stage) {
      out.push_back("stage order broken at " + ToString(inv));
    }
  }
  auto root = s.objects.find(plan.returns);
  if (root == s.objects.end() || !(root->second == s.root)) {
    out.push_back("root is not the host of " + plan.returns.ToString());
  }
  return out;
}

NetworkInstance AcceptanceInstance() {
  return NetworkInstance{{4, 3, 2, 3, 2, 1}, {1, 2, 3, 1, 2, 3}, 9};
}

std::string UniverseJson(const NetworkInstance& instance) {
  std::ostringstream out;
  out << "{\"comps\": [";
  for (std::size_t i = 0; i < instance.sockets.size(); ++i) {
    if (i > 0) out << ", ";
    out << "{\"class\": \"Component\", \"methods\": {\"getNrSock\": "
        << instance.sockets[i] << ", \"getType\": " << instance.types[i] << "}}";
  }
  out << "], \"nrCables\": " << instance.cables << "}";
  return out.str();
}

std::vector<OracleGraph> NetworkOracle(const NetworkInstance& instance,
                                       const std::vector<int>& key) {
  const int n = static_cast<int>(instance.sockets.size());
  std::vector<std::pair<int, int>> candidates;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) candidates.emplace_back(i, j);
  }
  std::vector<OracleGraph> out;
  const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    OracleGraph g;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    bool ok = true;
    for (std::size_t e = 0; e < candidates.size() && ok; ++e) {
      if (((mask >> e) & 1U) == 0) continue;
      auto [i, j] = candidates[e];
      if (key[static_cast<std::size_t>(i)] == key[static_cast<std::size_t>(j)]) ok = false;
      ++degree[static_cast<std::size_t>(i)];
      ++degree[static_cast<std::size_t>(j)];
      g.edges.insert({i, j});
    }
    if (!ok || static_cast<int>(g.edges.size()) > instance.cables) continue;
    for (int i = 0; i < n; ++i) {
      if (degree[static_cast<std::size_t>(i)] > instance.sockets[static_cast<std::size_t>(i)]) {
        ok = false;
      }
    }
    if (!ok) continue;
    // Connectivity by repeated relaxation from node 0.
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    if (n > 0) seen[0] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (auto [i, j] : g.edges) {
        if (seen[static_cast<std::size_t>(i)] != seen[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(i)] = seen[static_cast<std::size_t>(j)] = true;
          grew = true;
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) continue;
    int best = 0;
    for (int i = 1; i < n; ++i) {
      if (degree[static_cast<std::size_t>(i)] > degree[static_cast<std::size_t>(best)]) best = i;
    }
    g.returned = best;
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::optional<int> ComponentOfNode(const ObjectId& id) {
  if (!id.is_created() || id.skolem().class_name != "Node" ||
      id.skolem().args.size() != 1 || !id.skolem().args[0].is_object()) {
    return std::nullopt;
  }
  const ObjectId& comp = id.skolem().args[0].as_object();
  if (!comp.is_param()) return std::nullopt;
  return static_cast<int>(comp.param_index());
}

}  // namespace

std::optional<OracleGraph> GraphOfPlan(const ConstructionPlan& plan) {
  std::set<std::pair<int, int>> directed;
  for (const Invocation& inv : plan.invocations) {
    if (inv.method != "addNode" || inv.args.size() != 1 || !inv.args[0].is_object()) {
      return std::nullopt;
    }
    auto from = ComponentOfNode(inv.target);
    auto to = ComponentOfNode(inv.args[0].as_object());
    if (!from || !to) return std::nullopt;
    directed.insert({*from, *to});
  }
  OracleGraph g;
  for (auto [i, j] : directed) {
    if (!directed.contains({j, i})) return std::nullopt;
    if (i < j) g.edges.insert({i, j});
  }
  auto ret = ComponentOfNode(plan.returns);
  if (!ret) return std::nullopt;
  g.returned = *ret;
  return g;
}

}  // namespace ospec::testing
