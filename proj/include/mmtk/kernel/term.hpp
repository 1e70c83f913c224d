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

#ifndef MMTK_KERNEL_TERM_HPP
#define MMTK_KERNEL_TERM_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mmtk/kernel/uri.hpp"

namespace mmtk {

struct VarDecl;

/// An OpenMath-style object. Immutable; copies share structure.
///
/// Exactly one of: symbol reference (OMS), variable (OMV), application
/// (OMA, at least one argument), binding (OMBIND, at least one bound variable
/// with pairwise distinct names).
class Term {
 public:
  enum class Kind { SymRef, Var, App, Bind };

  static Term sym(Uri uri);
  static Term var(std::string name);
  static Term app(Term head, std::vector<Term> args);
  static Term bind(Term binder, std::vector<VarDecl> vars, Term body);

  Kind kind() const;
  bool isSym() const { return kind() == Kind::SymRef; }
  bool isVar() const { return kind() == Kind::Var; }
  bool isApp() const { return kind() == Kind::App; }
  bool isBind() const { return kind() == Kind::Bind; }
  bool isSym(const Uri& u) const;

  const Uri& uri() const;
  const std::string& name() const;
  const Term& head() const;
  std::span<const Term> args() const;
  const Term& binder() const;
  const std::vector<VarDecl>& vars() const;
  const Term& body() const;

  /// Structural (not alpha) equality.
  bool operator==(const Term& other) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct VarDecl {
  std::string name;
  std::optional<Term> type;
  std::optional<Term> definiens;

  bool operator==(const VarDecl&) const = default;
};

/// Ordered variable declarations; later entries shadow earlier ones.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<VarDecl> decls) : decls_(std::move(decls)) {}

  const VarDecl* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  Context extended(VarDecl decl) const;
  void push(VarDecl decl) { decls_.push_back(std::move(decl)); }

  std::size_t size() const { return decls_.size(); }
  bool empty() const { return decls_.empty(); }
  const std::vector<VarDecl>& decls() const { return decls_; }
  auto begin() const { return decls_.begin(); }
  auto end() const { return decls_.end(); }
  bool operator==(const Context&) const = default;

 private:
  std::vector<VarDecl> decls_;
};

/// Child-index path into a term. App: 0 = head, i = i-th argument.
/// Bind: 0 = binder, i in [1..n] = type of i-th variable, n+1 = body.
using Position = std::vector<std::size_t>;

std::string positionToString(const Position& p);
/// Parses the `/`-joined form; the empty string is the root.
Position parsePosition(std::string_view s);

using Substitution = std::map<std::string, Term>;

Term subterm(const Term& t, const Position& p);
Context contextAt(const Term& t, const Position& p);
/// Replaces the subterm at `p`; throws InvalidPosition.
Term replaceAt(const Term& t, const Position& p, const Term& replacement);
/// Every valid position, in pre-order.
std::vector<Position> positions(const Term& t);

std::set<std::string> freeVars(const Term& t);
bool occursFree(const std::string& name, const Term& t);
/// Symbol references occurring anywhere in `t`.
std::set<Uri> symbolsOf(const Term& t);

/// Capture-avoiding simultaneous substitution. A bound variable that would
/// capture is renamed to `name` + smallest unused positive integer suffix.
Term substitute(const Term& t, const Substitution& subst);

/// `base` itself if unused, otherwise base + smallest suffix n >= 1 not in
/// `avoid`.
std::string freshName(const std::string& base, const std::set<std::string>& avoid,
                      bool allowBase = false);

bool alphaEq(const Term& a, const Term& b);

std::size_t termSize(const Term& t);

}  // namespace mmtk

#endif  // MMTK_KERNEL_TERM_HPP
