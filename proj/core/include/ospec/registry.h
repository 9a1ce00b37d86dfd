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

#ifndef OSPEC_REGISTRY_H_
#define OSPEC_REGISTRY_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <typeindex>
#include <typeinfo>
#include <utility>
#include <variant>

#include "ospec/error.h"
#include "ospec/value.h"

namespace ospec {

// Type-erased handle to a host object. Copies share the object.
class HostRef {
 public:
  HostRef() = default;

  template <class T>
  static HostRef Make(std::string class_name, std::shared_ptr<T> object) {
    HostRef ref;
    ref.class_name_ = std::move(class_name);
    ref.type_ = std::type_index(typeid(T));
    ref.object_ = std::move(object);
    return ref;
  }

  const std::string& class_name() const { return class_name_; }
  bool empty() const { return object_ == nullptr; }
  const void* address() const { return object_.get(); }

  template <class T>
  T& As() const {
    if (object_ == nullptr || type_ != std::type_index(typeid(T))) {
      throw std::bad_cast();
    }
    return *static_cast<T*>(object_.get());
  }

  friend bool operator==(const HostRef& a, const HostRef& b) {
    return a.object_ == b.object_;
  }

 private:
  std::string class_name_;
  std::type_index type_ = std::type_index(typeid(void));
  std::shared_ptr<void> object_;
};

// Argument passed to a host constructor or method: ground integers and
// symbols pass through; object ids are resolved to their host objects.
using HostValue = std::variant<std::int64_t, Symbol, HostRef>;

// Stand-in for runtime reflection: invokers keyed by class (and method)
// name.
class ClassRegistry {
 public:
  using Constructor = std::function<HostRef(std::span<const HostValue>)>;
  using Method = std::function<std::optional<std::int64_t>(
      const HostRef&, std::span<const HostValue>)>;
  using Accessor = std::function<std::int64_t(const HostRef&)>;

  void AddConstructor(std::string class_name, Constructor ctor);
  void AddMethod(std::string class_name, std::string method, Method fn);
  void AddAccessor(std::string class_name, std::string method, Accessor fn);

  const Constructor* FindConstructor(const std::string& class_name) const;
  const Method* FindMethod(const std::string& class_name,
                           const std::string& method) const;
  const Accessor* FindAccessor(const std::string& class_name,
                               const std::string& method) const;

  // Invokers may be called from several plans concurrently only when the
  // registry owner declares them reentrant.
  bool reentrant() const { return reentrant_; }
  void set_reentrant(bool value) { reentrant_ = value; }

 private:
  std::map<std::string, Constructor> constructors_;
  std::map<std::pair<std::string, std::string>, Method> methods_;
  std::map<std::pair<std::string, std::string>, Accessor> accessors_;
  bool reentrant_ = false;
};

std::string ToString(const HostValue& value);

}  // namespace ospec

#endif  // OSPEC_REGISTRY_H_
