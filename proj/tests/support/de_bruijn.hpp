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

#ifndef MMTK_TESTS_DE_BRUIJN_HPP
#define MMTK_TESTS_DE_BRUIJN_HPP

// Nameless reference representation used as an independent oracle for
// capture-avoiding substitution. Free variables keep their names; bound
// variables become indices counted from the innermost binder.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mmtk/kernel/term.hpp"

namespace mmtk::testing {

struct DbTerm {
  enum class Tag { Sym, Free, Bound, App, Bind } tag;
  std::string label;  // symbol URI or free name
  std::size_t index = 0;
  // App: children[0] = head, rest = args.
  // Bind: children[0] = binder, then one slot per variable type (hasType
  // marks which are present), last = body.
  std::vector<DbTerm> children;
  std::vector<bool> hasType;

  bool operator==(const DbTerm&) const = default;
};

inline DbTerm toDb(const Term& t, std::vector<std::string>& env) {
  switch (t.kind()) {
    case Term::Kind::SymRef:
      return {DbTerm::Tag::Sym, t.uri().str(), 0, {}, {}};
    case Term::Kind::Var:
      for (std::size_t i = env.size(); i-- > 0;)
        if (env[i] == t.name()) return {DbTerm::Tag::Bound, "", env.size() - 1 - i, {}, {}};
      return {DbTerm::Tag::Free, t.name(), 0, {}, {}};
    case Term::Kind::App: {
      DbTerm out{DbTerm::Tag::App, "", 0, {}, {}};
      out.children.push_back(toDb(t.head(), env));
      for (const auto& a : t.args()) out.children.push_back(toDb(a, env));
      return out;
    }
    case Term::Kind::Bind: {
      DbTerm out{DbTerm::Tag::Bind, "", 0, {}, {}};
      out.children.push_back(toDb(t.binder(), env));
      const auto depth = env.size();
      for (const auto& v : t.vars()) {
        out.hasType.push_back(v.type.has_value());
        out.children.push_back(v.type ? toDb(*v.type, env) : DbTerm{DbTerm::Tag::Sym, "", 0, {}, {}});
        env.push_back(v.name);
      }
      out.children.push_back(toDb(t.body(), env));
      env.resize(depth);
      return out;
    }
  }
  return {};
}

inline DbTerm toDb(const Term& t) {
  std::vector<std::string> env;
  return toDb(t, env);
}

// Replacements contain no loose indices, so no shifting is required.
inline DbTerm substDb(const DbTerm& t, const std::map<std::string, DbTerm>& s) {
  if (t.tag == DbTerm::Tag::Free) {
    auto it = s.find(t.label);
    return it == s.end() ? t : it->second;
  }
  DbTerm out = t;
  for (auto& c : out.children) c = substDb(c, s);
  return out;
}

inline Term fromDb(const DbTerm& t, std::vector<std::string>& env) {
  switch (t.tag) {
    case DbTerm::Tag::Sym: return Term::sym(Uri::parse(t.label));
    case DbTerm::Tag::Free: return Term::var(t.label);
    case DbTerm::Tag::Bound: return Term::var(env[env.size() - 1 - t.index]);
    case DbTerm::Tag::App: {
      std::vector<Term> args;
      for (std::size_t i = 1; i < t.children.size(); ++i) args.push_back(fromDb(t.children[i], env));
      return Term::app(fromDb(t.children[0], env), std::move(args));
    }
    case DbTerm::Tag::Bind: {
      Term binder = fromDb(t.children[0], env);
      const auto depth = env.size();
      std::vector<VarDecl> vars;
      for (std::size_t i = 0; i < t.hasType.size(); ++i) {
        VarDecl d{"_b" + std::to_string(env.size()), std::nullopt, std::nullopt};
        if (t.hasType[i]) d.type = fromDb(t.children[i + 1], env);
        env.push_back(d.name);
        vars.push_back(std::move(d));
      }
      Term body = fromDb(t.children.back(), env);
      env.resize(depth);
      return Term::bind(std::move(binder), std::move(vars), std::move(body));
    }
  }
  return Term::var("?");
}

inline Term fromDb(const DbTerm& t) {
  std::vector<std::string> env;
  return fromDb(t, env);
}

}  // namespace mmtk::testing

#endif
