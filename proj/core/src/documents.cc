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

#include "ospec/documents.h"

#include <json.hpp>

#include "ospec/error.h"

namespace ospec {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<ParamArg> ReadUniverse(std::string_view json_text,
                                   const SpecProgram& spec) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Stage::kDocument, std::string("universe is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Stage::kDocument, "universe must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (spec.FindParam(key) == nullptr) {
      throw Error(Stage::kDocument, "universe names unknown parameter '" + key + "'");
    }
  }

  std::vector<ParamArg> args;
  for (const ParamDecl& p : spec.params) {
    auto it = doc.find(p.name);
    if (it == doc.end()) {
      throw Error(Stage::kDocument, "universe lacks parameter '" + p.name + "'");
    }
    if (!p.is_array()) {
      if (!it->is_number_integer()) {
        throw Error(Stage::kDocument, "parameter '" + p.name + "' must be an integer");
      }
      args.emplace_back(it->get<std::int64_t>());
      continue;
    }
    if (!it->is_array()) {
      throw Error(Stage::kDocument, "parameter '" + p.name + "' must be an array");
    }
    std::vector<HostRef> objects;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& rec = (*it)[i];
      const std::string where = p.name + "[" + std::to_string(i) + "]";
      if (!rec.is_object()) throw Error(Stage::kDocument, where + " must be an object");
      std::string cls = p.class_name;
      if (auto c = rec.find("class"); c != rec.end()) {
        if (!c->is_string() || c->get<std::string>() != p.class_name) {
          throw Error(Stage::kDocument, where + " has class " + c->dump() +
                                            ", expected \"" + p.class_name + "\"");
        }
      }
      std::map<std::string, std::int64_t> methods;
      if (auto m = rec.find("methods"); m != rec.end()) {
        if (!m->is_object()) throw Error(Stage::kDocument, where + ".methods must be an object");
        for (const auto& [name, value] : m->items()) {
          if (!value.is_number_integer()) {
            throw Error(Stage::kDocument, where + ".methods." + name + " must be an integer");
          }
          methods[name] = value.get<std::int64_t>();
        }
      }
      objects.push_back(MakeRecord(cls, std::move(methods)));
    }
    args.emplace_back(std::move(objects));
  }
  return args;
}

namespace {

class Renderer {
 public:
  explicit Renderer(const Solution& solution) {
    for (const auto& [id, host] : solution.objects) names_[host.address()] = id.ToString();
  }

  ordered_json Val(const ospec::Value& v) const {
    switch (v.kind()) {
      case ospec::Value::Kind::kInt: return v.as_int();
      case ospec::Value::Kind::kSymbol: return ordered_json{{"symbol", v.as_symbol().name}};
      case ospec::Value::Kind::kObject: return v.as_object().ToString();
    }
    return nullptr;
  }

  ordered_json Values(const std::vector<ospec::Value>& vs) const {
    ordered_json out = ordered_json::array();
    for (const ospec::Value& v : vs) out.push_back(Val(v));
    return out;
  }

  ordered_json Host(const HostValue& v) const {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    if (const auto* s = std::get_if<Symbol>(&v)) return ordered_json{{"symbol", s->name}};
    return Name(std::get<HostRef>(v));
  }

  ordered_json Hosts(const std::vector<HostValue>& vs) const {
    ordered_json out = ordered_json::array();
    for (const HostValue& v : vs) out.push_back(Host(v));
    return out;
  }

  std::string Name(const HostRef& ref) const {
    auto it = names_.find(ref.address());
    return it == names_.end() ? "?" : it->second;
  }

 private:
  std::map<const void*, std::string> names_;
};

ordered_json Parameters(const ObjectUniverse& universe) {
  ordered_json out = ordered_json::object();
  for (const std::string& param : universe.array_order) {
    ordered_json ids = ordered_json::array();
    for (const ObjectId& id : universe.param_objects.at(param)) ids.push_back(id.ToString());
    out[param] = std::move(ids);
  }
  for (const auto& [name, value] : universe.scalar_params) out[name] = value;
  return out;
}

ordered_json Report(const PlanReport& report, const ObjectUniverse& universe) {
  const Solution& s = report.solution;
  Renderer r(s);
  ordered_json doc;
  doc["parameters"] = Parameters(universe);

  ordered_json creations = ordered_json::array();
  for (const Creation& c : s.plan.creations) {
    creations.push_back(ordered_json{
        {"id", c.id.ToString()}, {"class", c.class_name}, {"args", r.Values(c.args)}});
  }
  doc["creations"] = std::move(creations);

  ordered_json invocations = ordered_json::array();
  for (const Invocation& i : s.plan.invocations) {
    invocations.push_back(ordered_json{{"stage", i.stage},
                                       {"target", i.target.ToString()},
                                       {"method", i.method},
                                       {"args", r.Values(i.args)}});
  }
  doc["invocations"] = std::move(invocations);
  doc["return"] = s.plan.returns.ToString();

  ordered_json objects = ordered_json::array();
  for (const auto& [id, host] : s.objects) {
    ordered_json o;
    o["id"] = id.ToString();
    o["class"] = id.is_created() ? id.skolem().class_name : host.class_name();
    const RecordObject* record = nullptr;
    try {
      record = &host.As<RecordObject>();
    } catch (const std::bad_cast&) {
    }
    if (record != nullptr) {
      if (id.is_created()) o["constructor_args"] = r.Hosts(record->constructor_args);
      ordered_json calls = ordered_json::array();
      for (const auto& [method, args] : record->calls) {
        calls.push_back(ordered_json{{"method", method}, {"args", r.Hosts(args)}});
      }
      o["calls"] = std::move(calls);
    }
    objects.push_back(std::move(o));
  }
  doc["objects"] = std::move(objects);

  ordered_json log = ordered_json::array();
  for (const CallLog::Entry& e : report.log) {
    if (e.is_construction) {
      log.push_back(ordered_json{{"op", "new"},
                                 {"class", e.class_name},
                                 {"object", r.Name(e.object)},
                                 {"args", r.Hosts(e.args)}});
    } else {
      log.push_back(ordered_json{{"op", "call"},
                                 {"target", r.Name(e.object)},
                                 {"method", e.method},
                                 {"args", r.Hosts(e.args)}});
    }
  }
  doc["log"] = std::move(log);
  return doc;
}

}  // namespace

std::string RenderResult(const std::vector<PlanReport>& reports,
                         const ObjectUniverse& universe) {
  ordered_json doc;
  doc["result"] = reports.empty() ? "UNSATISFIABLE" : "SATISFIABLE";
  ordered_json solutions = ordered_json::array();
  for (const PlanReport& r : reports) solutions.push_back(Report(r, universe));
  doc["solutions"] = std::move(solutions);
  return doc.dump(2) + "\n";
}

}  // namespace ospec
