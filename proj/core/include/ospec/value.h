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

#ifndef OSPEC_VALUE_H_
#define OSPEC_VALUE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace ospec {

class Value;
struct Skolem;

struct Symbol {
  std::string name;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

// Identifier of an object in one evaluation. Parameter objects are numbered
// p0, p1, ... in enumeration order; created objects are skolem terms
// new(Class, args) and are therefore functional in their arguments.
class ObjectId {
 public:
  ObjectId() = default;

  static ObjectId Param(std::int64_t index);
  static ObjectId Created(std::string class_name, std::vector<Value> args);

  bool is_param() const { return created_ == nullptr; }
  bool is_created() const { return created_ != nullptr; }
  std::int64_t param_index() const { return param_index_; }
  // Requires is_created().
  const Skolem& skolem() const { return *created_; }

  std::string ToString() const;
  std::size_t Hash() const;

  // Parameter objects precede created objects; parameter objects follow
  // their order index; created objects compare by class name, then by
  // argument tuple.
  friend std::strong_ordering operator<=>(const ObjectId& a, const ObjectId& b);
  friend bool operator==(const ObjectId& a, const ObjectId& b);

 private:
  std::int64_t param_index_ = 0;
  std::shared_ptr<const Skolem> created_;
};

// Ground value: an integer, a symbolic constant, or an object reference.
// Values of different kinds order as Int < Symbol < Object.
class Value {
 public:
  enum class Kind { kInt, kSymbol, kObject };

  Value() : data_(std::int64_t{0}) {}
  static Value Int(std::int64_t v) { return Value(Data(v)); }
  static Value Sym(std::string name) { return Value(Data(Symbol{std::move(name)})); }
  static Value Object(ObjectId id) { return Value(Data(std::move(id))); }

  Kind kind() const { return static_cast<Kind>(data_.index()); }
  bool is_int() const { return kind() == Kind::kInt; }
  bool is_symbol() const { return kind() == Kind::kSymbol; }
  bool is_object() const { return kind() == Kind::kObject; }

  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  const Symbol& as_symbol() const { return std::get<Symbol>(data_); }
  const ObjectId& as_object() const { return std::get<ObjectId>(data_); }

  std::string ToString() const;
  std::size_t Hash() const;

  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b);

 private:
  using Data = std::variant<std::int64_t, Symbol, ObjectId>;
  explicit Value(Data data) : data_(std::move(data)) {}
  Data data_;
};

struct Skolem {
  std::string class_name;
  std::vector<Value> args;
};

std::strong_ordering CompareTuples(const std::vector<Value>& a,
                                   const std::vector<Value>& b);

std::string JoinValues(const std::vector<Value>& values);

inline std::size_t HashCombine(std::size_t seed, std::size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.Hash(); }
};

struct ObjectIdHash {
  std::size_t operator()(const ObjectId& id) const { return id.Hash(); }
};

}  // namespace ospec

#endif  // OSPEC_VALUE_H_
