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

#include "ospec/registry.h"

#include <sstream>

namespace ospec {

void ClassRegistry::AddConstructor(std::string class_name, Constructor ctor) {
  constructors_[std::move(class_name)] = std::move(ctor);
}

void ClassRegistry::AddMethod(std::string class_name, std::string method,
                              Method fn) {
  methods_[{std::move(class_name), std::move(method)}] = std::move(fn);
}

void ClassRegistry::AddAccessor(std::string class_name, std::string method,
                                Accessor fn) {
  accessors_[{std::move(class_name), std::move(method)}] = std::move(fn);
}

const ClassRegistry::Constructor* ClassRegistry::FindConstructor(
    const std::string& class_name) const {
  auto it = constructors_.find(class_name);
  return it == constructors_.end() ? nullptr : &it->second;
}

const ClassRegistry::Method* ClassRegistry::FindMethod(
    const std::string& class_name, const std::string& method) const {
  auto it = methods_.find({class_name, method});
  return it == methods_.end() ? nullptr : &it->second;
}

const ClassRegistry::Accessor* ClassRegistry::FindAccessor(
    const std::string& class_name, const std::string& method) const {
  auto it = accessors_.find({class_name, method});
  return it == accessors_.end() ? nullptr : &it->second;
}

std::string ToString(const HostValue& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  if (const auto* s = std::get_if<Symbol>(&value)) return s->name;
  const HostRef& ref = std::get<HostRef>(value);
  std::ostringstream out;
  out << ref.class_name() << "@" << ref.address();
  return out.str();
}

}  // namespace ospec
