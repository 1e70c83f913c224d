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

#ifndef MMTK_SYNTAX_STYLE_HPP
#define MMTK_SYNTAX_STYLE_HPP

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "mmtk/kernel/module.hpp"

namespace mmtk::syntax {

enum class Target { Text, Html };

std::string_view to_string(Target t);
std::optional<Target> targetFromString(std::string_view s);

/// A named rendering profile. Entries in `notations` take precedence over the
/// notations declared in the library; declared ones are only consulted when
/// `useDeclared` is set.
struct Style {
  std::string name;
  Target target = Target::Text;
  bool useDeclared = true;
  std::map<Uri, Notation> notations;
};

/// Styles by name. Starts with "default" (text), "html" and "plain" (text,
/// no notations).
class StyleRegistry {
 public:
  StyleRegistry();

  /// Throws DuplicateDeclaration if the name is taken.
  void add(Style s);
  /// Throws NotFound.
  Style get(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, Style> styles_;
};

}  // namespace mmtk::syntax

#endif  // MMTK_SYNTAX_STYLE_HPP
