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

#include "ospec/core_text.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ospec/error.h"

namespace ospec {

namespace {

bool IsPlainIdentifier(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::string Quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string Term(const Value& v);

std::string Terms(const std::vector<Value>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ",";
    out += Term(vs[i]);
  }
  return out;
}

std::string ObjectTerm(const ObjectId& id) {
  if (id.is_param()) return "obj(" + std::to_string(id.param_index()) + ")";
  const Skolem& s = id.skolem();
  std::string out = "new(" + Quote(s.class_name);
  if (!s.args.empty()) out += "," + Terms(s.args);
  return out + ")";
}

std::string Term(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::kInt: return std::to_string(v.as_int());
    case Value::Kind::kSymbol: {
      const std::string& name = v.as_symbol().name;
      return IsPlainIdentifier(name) ? name : Quote(name);
    }
    case Value::Kind::kObject: return ObjectTerm(v.as_object());
  }
  return {};
}

std::string Predicate(const std::string& name) {
  if (IsPlainIdentifier(name)) return name;
  if (!name.empty() && name[0] == '_') return "ospec" + name;
  return "ospec_u_" + name;
}

std::string Apply(const std::string& functor, const std::string& args) {
  return args.empty() ? functor : functor + "(" + args + ")";
}

std::string Join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string CoreAtomName(const GroundAtom& a) {
  switch (a.kind) {
    case GroundAtom::Kind::kOrdinary: return Apply(Predicate(a.name), Terms(a.args));
    case GroundAtom::Kind::kNew: {
      std::string args = Quote(a.name);
      if (!a.args.empty()) args += "," + Terms(a.args);
      return "created(" + args + ")";
    }
    case GroundAtom::Kind::kExe: {
      std::string args = std::to_string(a.stage) + "," + Term(a.target) + "," +
                         Quote(a.name);
      if (!a.args.empty()) args += "," + Terms(a.args);
      return "exe(" + args + ")";
    }
    case GroundAtom::Kind::kReturn: return "ret(" + Term(a.target) + ")";
    case GroundAtom::Kind::kParamMember:
      return "param_member(" + Quote(a.name) + "," + Terms(a.args) + ")";
  }
  return {};
}

std::string CoreText::MappingTable(const GroundProgram& program) const {
  std::vector<const std::string*> by_id(program.atom_count(), nullptr);
  for (const auto& [name, id] : atom_ids) {
    if (id < by_id.size()) by_id[id] = &name;
  }
  std::ostringstream out;
  for (AtomId id = 0; id < by_id.size(); ++id) {
    if (by_id[id] == nullptr) continue;
    out << *by_id[id] << "\t" << program.atom(id).ToString() << "\n";
  }
  return out.str();
}

CoreText EmitCoreText(const GroundProgram& program, CoreTextOptions options) {
  CoreText out;
  std::vector<std::string> names;
  names.reserve(program.atom_count());
  for (AtomId id = 0; id < program.atom_count(); ++id) {
    names.push_back(CoreAtomName(program.atom(id)));
    out.atom_ids.emplace(names.back(), id);
  }
  auto card = [&](const GroundCardinality& c) {
    std::vector<std::string> lits;
    for (AtomId a : c.literals) lits.push_back(names[a]);
    std::string s;
    if (c.lower) s += std::to_string(*c.lower) + " ";
    s += lits.empty() ? "{ }" : "{ " + Join(lits, "; ") + " }";
    if (c.upper) s += " " + std::to_string(*c.upper);
    return s;
  };

  std::ostringstream text;
  for (const GroundRule& r : program.rules()) {
    std::string head;
    if (r.head_kind == GroundRule::HeadKind::kAtom) head = names[r.head];
    if (r.is_choice()) head = card(r.choice);
    std::vector<std::string> body;
    for (AtomId a : r.body_pos) body.push_back(names[a]);
    for (AtomId a : r.body_neg) body.push_back("not " + names[a]);
    for (const GroundCardinality& c : r.body_card) body.push_back(card(c));
    if (body.empty()) {
      text << (r.is_constraint() ? ":- #true" : head) << ".\n";
    } else {
      text << head << (head.empty() ? "" : " ") << ":- " << Join(body, ", ") << ".\n";
    }
  }
  if (options.include_minimize && program.has_minimize()) {
    std::vector<std::string> elems;
    for (std::size_t i = 0; i < program.minimize().size(); ++i) {
      elems.push_back("1," + std::to_string(i) + " : " + names[program.minimize()[i]]);
    }
    text << "#minimize{ " << Join(elems, "; ") << " }.\n";
  }
  out.program = text.str();
  return out;
}

namespace {

std::vector<std::string> SplitAtoms(std::string_view line) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      current += c;
      if (c == '\\' && i + 1 < line.size()) {
        current += line[++i];
      } else if (c == '"') {
        quoted = false;
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (c == '"') quoted = true;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    current += c;
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::vector<AtomId>> ParseSolverOutput(std::string_view text,
                                                   const CoreText& table) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }

  std::vector<std::vector<AtomId>> models;
  std::string verdict;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = Trim(lines[i]);
    if (line.starts_with("Answer:")) {
      if (!verdict.empty()) {
        throw Error(Stage::kBackend, "answer block after verdict at line " +
                                         std::to_string(i + 1));
      }
      if (i + 1 >= lines.size()) {
        throw Error(Stage::kBackend, "answer block without an atom line at line " +
                                         std::to_string(i + 1));
      }
      std::vector<AtomId> model;
      for (const std::string& name : SplitAtoms(lines[++i])) {
        auto it = table.atom_ids.find(name);
        if (it == table.atom_ids.end()) {
          throw Error(Stage::kBackend, "unknown atom '" + name + "' in solver output");
        }
        model.push_back(it->second);
      }
      std::sort(model.begin(), model.end());
      model.erase(std::unique(model.begin(), model.end()), model.end());
      models.push_back(std::move(model));
      continue;
    }
    if (line == "SATISFIABLE" || line == "UNSATISFIABLE" ||
        line == "OPTIMUM FOUND" || line == "UNKNOWN") {
      if (verdict.empty()) verdict = std::string(line);
    }
  }
  if (verdict.empty()) throw Error(Stage::kBackend, "solver output has no verdict line");
  if (verdict == "UNKNOWN") throw Error(Stage::kBackend, "solver reported UNKNOWN");
  if (verdict == "UNSATISFIABLE") {
    if (!models.empty()) {
      throw Error(Stage::kBackend, "UNSATISFIABLE verdict after answer blocks");
    }
    return {};
  }
  return models;
}

}  // namespace ospec
