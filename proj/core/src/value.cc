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

#include "ospec/value.h"

#include <functional>
#include <sstream>

namespace ospec {

ObjectId ObjectId::Param(std::int64_t index) {
  ObjectId id;
  id.param_index_ = index;
  return id;
}

ObjectId ObjectId::Created(std::string class_name, std::vector<Value> args) {
  ObjectId id;
  id.param_index_ = -1;
  id.created_ = std::make_shared<const Skolem>(
      Skolem{std::move(class_name), std::move(args)});
  return id;
}

std::string ObjectId::ToString() const {
  if (is_param()) return "p" + std::to_string(param_index_);
  std::string out = "new(" + created_->class_name;
  for (const Value& v : created_->args) out += "," + v.ToString();
  return out + ")";
}

std::size_t ObjectId::Hash() const {
  if (is_param()) return std::hash<std::int64_t>{}(param_index_);
  std::size_t h = std::hash<std::string>{}(created_->class_name);
  for (const Value& v : created_->args) h = HashCombine(h, v.Hash());
  return HashCombine(h, 0x51ed);
}

std::strong_ordering operator<=>(const ObjectId& a, const ObjectId& b) {
  if (a.is_param() != b.is_param()) {
    return a.is_param() ? std::strong_ordering::less
                        : std::strong_ordering::greater;
  }
  if (a.is_param()) return a.param_index_ <=> b.param_index_;
  if (a.created_ == b.created_) return std::strong_ordering::equal;
  if (auto c = a.created_->class_name <=> b.created_->class_name; c != 0) {
    return c;
  }
  return CompareTuples(a.created_->args, b.created_->args);
}

bool operator==(const ObjectId& a, const ObjectId& b) {
  return (a <=> b) == 0;
}

std::string Value::ToString() const {
  switch (kind()) {
    case Kind::kInt: return std::to_string(as_int());
    case Kind::kSymbol: return as_symbol().name;
    case Kind::kObject: return as_object().ToString();
  }
  return {};
}

std::size_t Value::Hash() const {
  std::size_t h = static_cast<std::size_t>(kind());
  switch (kind()) {
    case Kind::kInt: return HashCombine(h, std::hash<std::int64_t>{}(as_int()));
    case Kind::kSymbol:
      return HashCombine(h, std::hash<std::string>{}(as_symbol().name));
    case Kind::kObject: return HashCombine(h, as_object().Hash());
  }
  return h;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.data_.index() != b.data_.index()) {
    return a.data_.index() <=> b.data_.index();
  }
  switch (a.kind()) {
    case Value::Kind::kInt: return a.as_int() <=> b.as_int();
    case Value::Kind::kSymbol: return a.as_symbol() <=> b.as_symbol();
    case Value::Kind::kObject: return a.as_object() <=> b.as_object();
  }
  return std::strong_ordering::equal;
}

bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

std::strong_ordering CompareTuples(const std::vector<Value>& a,
                                   const std::vector<Value>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

std::string JoinValues(const std::vector<Value>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += values[i].ToString();
  }
  return out;
}

}  // namespace ospec
