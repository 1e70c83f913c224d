/*
 * Copyright 2026 The mmtk Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mmtk/syntax/style.hpp"

namespace mmtk::syntax {

std::string_view to_string(Target t) { return t == Target::Html ? "html" : "text"; }

std::optional<Target> targetFromString(std::string_view s) {
  if (s == "text") return Target::Text;
  if (s == "html") return Target::Html;
  return std::nullopt;
}

StyleRegistry::StyleRegistry() {
  styles_.emplace("default", Style{"default", Target::Text, true, {}});
  styles_.emplace("html", Style{"html", Target::Html, true, {}});
  styles_.emplace("plain", Style{"plain", Target::Text, false, {}});
}

void StyleRegistry::add(Style s) {
  for (const auto& [uri, n] : s.notations) n.validate();
  std::unique_lock lock(mutex_);
  std::string name = s.name;
  if (!styles_.emplace(name, std::move(s)).second)
    throw Error(ErrorKind::DuplicateDeclaration, "style " + name + " already registered");
}

Style StyleRegistry::get(const std::string& name) const {
  std::shared_lock lock(mutex_);
  auto it = styles_.find(name);
  if (it == styles_.end()) throw Error(ErrorKind::NotFound, "no style named " + name);
  return it->second;
}

bool StyleRegistry::contains(const std::string& name) const {
  std::shared_lock lock(mutex_);
  return styles_.count(name) > 0;
}

std::vector<std::string> StyleRegistry::names() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [n, s] : styles_) out.push_back(n);
  return out;
}

}  // namespace mmtk::syntax
