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

#ifndef MMTK_SYNTAX_SCOPE_HPP
#define MMTK_SYNTAX_SCOPE_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mmtk/kernel/library.hpp"

namespace mmtk::syntax {

/// Looks a theory up by URI; used so that a document can refer to theories
/// it declared earlier before they reach the library.
using TheoryLookup = std::function<TheoryPtr(const Uri&)>;

TheoryLookup libraryLookup(const Library& lib);

/// Names and notations visible inside a theory: its own constants, then the
/// transitive includes, then every meta-theory together with its includes.
/// Earlier sources shadow later ones.
class Scope {
 public:
  Scope() = default;
  Scope(const Theory& theory, const TheoryLookup& lookup);
  Scope(const Theory& theory, const Library& lib) : Scope(theory, libraryLookup(lib)) {}

  /// Adds a constant of the theory under construction; it shadows everything
  /// visible so far.
  void declareLocal(const Uri& theory, const Constant& c);

  std::optional<Uri> lookup(const std::string& name) const;
  /// Notation declared for a visible symbol.
  const Notation* notationFor(const Uri& symbol) const;
  /// Visible notation using this delimiter.
  const Notation* notationByDelimiter(const std::string& delimiter) const;

  /// Module URIs contributing to this scope, in shadowing order.
  const std::vector<Uri>& modules() const { return modules_; }
  const std::string& ns() const { return ns_; }

 private:
  void addTheory(const Theory& t, bool overrideExisting);

  std::string ns_;
  std::vector<Uri> modules_;
  std::map<std::string, Uri> names_;
  std::map<Uri, Notation> notations_;
  std::map<std::string, Uri> delimiters_;
};

/// URIs of the theories reachable from `t` via includes (transitively,
/// depth-first, excluding `t`) and via the meta chain with their includes.
std::vector<Uri> visibleModules(const Theory& t, const TheoryLookup& lookup);

}  // namespace mmtk::syntax

#endif  // MMTK_SYNTAX_SCOPE_HPP
