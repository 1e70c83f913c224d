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

#include "mmtk/kernel/term.hpp"

#include <charconv>
#include <variant>

#include "mmtk/kernel/error.hpp"

namespace mmtk {

namespace {
struct SymData { Uri uri; };
struct VarData { std::string name; };
struct AppData { Term head; std::vector<Term> args; };
struct BindData { Term binder; std::vector<VarDecl> vars; Term body; };
}  // namespace

struct Term::Node {
  std::variant<SymData, VarData, AppData, BindData> data;
};

Term Term::sym(Uri uri) {
  return Term(std::make_shared<const Node>(Node{SymData{std::move(uri)}}));
}

Term Term::var(std::string name) {
  if (name.empty()) throw Error(ErrorKind::SyntaxError, "variable name must be nonempty");
  return Term(std::make_shared<const Node>(Node{VarData{std::move(name)}}));
}

Term Term::app(Term head, std::vector<Term> args) {
  if (args.empty()) throw Error(ErrorKind::SyntaxError, "application needs at least one argument");
  return Term(std::make_shared<const Node>(Node{AppData{std::move(head), std::move(args)}}));
}

Term Term::bind(Term binder, std::vector<VarDecl> vars, Term body) {
  if (vars.empty()) throw Error(ErrorKind::SyntaxError, "binding needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.name.empty()) throw Error(ErrorKind::SyntaxError, "variable name must be nonempty");
    if (!seen.insert(v.name).second)
      throw Error(ErrorKind::DuplicateDeclaration, "variable '" + v.name + "' bound twice");
  }
  return Term(std::make_shared<const Node>(
      Node{BindData{std::move(binder), std::move(vars), std::move(body)}}));
}

Term::Kind Term::kind() const { return static_cast<Kind>(node_->data.index()); }

bool Term::isSym(const Uri& u) const { return isSym() && uri() == u; }

const Uri& Term::uri() const { return std::get<SymData>(node_->data).uri; }
const std::string& Term::name() const { return std::get<VarData>(node_->data).name; }
const Term& Term::head() const { return std::get<AppData>(node_->data).head; }
std::span<const Term> Term::args() const { return std::get<AppData>(node_->data).args; }
const Term& Term::binder() const { return std::get<BindData>(node_->data).binder; }
const std::vector<VarDecl>& Term::vars() const { return std::get<BindData>(node_->data).vars; }
const Term& Term::body() const { return std::get<BindData>(node_->data).body; }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::SymRef: return uri() == other.uri();
    case Kind::Var: return name() == other.name();
    case Kind::App: {
      if (!(head() == other.head()) || args().size() != other.args().size()) return false;
      for (std::size_t i = 0; i < args().size(); ++i)
        if (!(args()[i] == other.args()[i])) return false;
      return true;
    }
    case Kind::Bind:
      return binder() == other.binder() && vars() == other.vars() && body() == other.body();
  }
  return false;
}

const VarDecl* Context::find(const std::string& name) const {
  for (auto it = decls_.rbegin(); it != decls_.rend(); ++it)
    if (it->name == name) return &*it;
  return nullptr;
}

Context Context::extended(VarDecl decl) const {
  Context c = *this;
  c.push(std::move(decl));
  return c;
}

std::string positionToString(const Position& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '/';
    out += std::to_string(p[i]);
  }
  return out;
}

Position parsePosition(std::string_view s) {
  Position p;
  if (s.empty()) return p;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto slash = s.find('/', start);
    auto part = s.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw Error(ErrorKind::InvalidPosition, "malformed position '" + std::string(s) + "'");
    p.push_back(value);
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return p;
}

namespace {

[[noreturn]] void invalid(const Position& p, std::size_t depth) {
  Position prefix(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(depth + 1));
  throw Error(ErrorKind::InvalidPosition, "no subterm at position '" + positionToString(prefix) + "'");
}

const Term& child(const Term& t, std::size_t index, const Position& p, std::size_t depth) {
  switch (t.kind()) {
    case Term::Kind::App:
      if (index == 0) return t.head();
      if (index <= t.args().size()) return t.args()[index - 1];
      break;
    case Term::Kind::Bind: {
      const auto n = t.vars().size();
      if (index == 0) return t.binder();
      if (index <= n) {
        const auto& type = t.vars()[index - 1].type;
        if (type) return *type;
        break;
      }
      if (index == n + 1) return t.body();
      break;
    }
    default:
      break;
  }
  invalid(p, depth);
}

}  // namespace

Term subterm(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t d = 0; d < p.size(); ++d) cur = &child(*cur, p[d], p, d);
  return *cur;
}

Context contextAt(const Term& t, const Position& p) {
  Context ctx;
  const Term* cur = &t;
  for (std::size_t d = 0; d < p.size(); ++d) {
    const Term& next = child(*cur, p[d], p, d);
    if (cur->isBind() && p[d] >= 1) {
      const auto& vars = cur->vars();
      std::size_t inScope = std::min(p[d] - 1, vars.size());
      for (std::size_t i = 0; i < inScope; ++i) ctx.push(vars[i]);
    }
    cur = &next;
  }
  return ctx;
}

namespace {

Term replaceRec(const Term& t, const Position& p, std::size_t d, const Term& r) {
  if (d == p.size()) return r;
  child(t, p[d], p, d);  // validates
  std::size_t i = p[d];
  if (t.isApp()) {
    if (i == 0) return Term::app(replaceRec(t.head(), p, d + 1, r), {t.args().begin(), t.args().end()});
    std::vector<Term> args(t.args().begin(), t.args().end());
    args[i - 1] = replaceRec(args[i - 1], p, d + 1, r);
    return Term::app(t.head(), std::move(args));
  }
  auto vars = t.vars();
  if (i == 0) return Term::bind(replaceRec(t.binder(), p, d + 1, r), vars, t.body());
  if (i <= vars.size()) {
    vars[i - 1].type = replaceRec(*vars[i - 1].type, p, d + 1, r);
    return Term::bind(t.binder(), std::move(vars), t.body());
  }
  return Term::bind(t.binder(), std::move(vars), replaceRec(t.body(), p, d + 1, r));
}

void collectPositions(const Term& t, Position& cur, std::vector<Position>& out) {
  out.push_back(cur);
  auto visit = [&](std::size_t i, const Term& c) {
    cur.push_back(i);
    collectPositions(c, cur, out);
    cur.pop_back();
  };
  if (t.isApp()) {
    visit(0, t.head());
    for (std::size_t i = 0; i < t.args().size(); ++i) visit(i + 1, t.args()[i]);
  } else if (t.isBind()) {
    visit(0, t.binder());
    for (std::size_t i = 0; i < t.vars().size(); ++i)
      if (t.vars()[i].type) visit(i + 1, *t.vars()[i].type);
    visit(t.vars().size() + 1, t.body());
  }
}

void collectFree(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::SymRef: return;
    case Term::Kind::Var:
      if (!bound.count(t.name())) out.insert(t.name());
      return;
    case Term::Kind::App:
      collectFree(t.head(), bound, out);
      for (const auto& a : t.args()) collectFree(a, bound, out);
      return;
    case Term::Kind::Bind: {
      collectFree(t.binder(), bound, out);
      std::vector<std::string> added;
      for (const auto& v : t.vars()) {
        if (v.type) collectFree(*v.type, bound, out);
        if (v.definiens) collectFree(*v.definiens, bound, out);
        if (bound.insert(v.name).second) added.push_back(v.name);
      }
      collectFree(t.body(), bound, out);
      for (const auto& n : added) bound.erase(n);
      return;
    }
  }
}

void collectSymbols(const Term& t, std::set<Uri>& out) {
  switch (t.kind()) {
    case Term::Kind::SymRef: out.insert(t.uri()); return;
    case Term::Kind::Var: return;
    case Term::Kind::App:
      collectSymbols(t.head(), out);
      for (const auto& a : t.args()) collectSymbols(a, out);
      return;
    case Term::Kind::Bind:
      collectSymbols(t.binder(), out);
      for (const auto& v : t.vars()) {
        if (v.type) collectSymbols(*v.type, out);
        if (v.definiens) collectSymbols(*v.definiens, out);
      }
      collectSymbols(t.body(), out);
      return;
  }
}

// Free variables of vars[from..] and body, treating vars[from..] as binding
// in sequence.
std::set<std::string> scopeFreeVars(const std::vector<VarDecl>& vars, std::size_t from, const Term& body) {
  std::set<std::string> bound, out;
  for (std::size_t j = from; j < vars.size(); ++j) {
    if (vars[j].type) collectFree(*vars[j].type, bound, out);
    if (vars[j].definiens) collectFree(*vars[j].definiens, bound, out);
    bound.insert(vars[j].name);
  }
  collectFree(body, bound, out);
  return out;
}

Term substRec(const Term& t, const Substitution& s) {
  if (s.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::SymRef:
      return t;
    case Term::Kind::Var: {
      auto it = s.find(t.name());
      return it == s.end() ? t : it->second;
    }
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substRec(a, s));
      return Term::app(substRec(t.head(), s), std::move(args));
    }
    case Term::Kind::Bind:
      break;
  }
  Term binder = substRec(t.binder(), s);
  Substitution cur = s;
  const auto& vars = t.vars();
  std::vector<VarDecl> out;
  out.reserve(vars.size());
  std::set<std::string> taken;
  for (const auto& v : vars) taken.insert(v.name);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    VarDecl d = vars[i];
    if (d.type) d.type = substRec(*d.type, cur);
    if (d.definiens) d.definiens = substRec(*d.definiens, cur);
    cur.erase(d.name);
    if (!cur.empty()) {
      auto scope = scopeFreeVars(vars, i + 1, t.body());
      bool capture = false;
      for (const auto& [key, value] : cur) {
        if (scope.count(key) && occursFree(d.name, value)) {
          capture = true;
          break;
        }
      }
      if (capture) {
        std::set<std::string> avoid = scope;
        avoid.insert(taken.begin(), taken.end());
        for (const auto& [key, value] : cur) {
          auto fv = freeVars(value);
          avoid.insert(fv.begin(), fv.end());
        }
        std::string fresh = freshName(d.name, avoid);
        taken.insert(fresh);
        cur.insert_or_assign(d.name, Term::var(fresh));
        d.name = fresh;
      }
    }
    out.push_back(std::move(d));
  }
  return Term::bind(std::move(binder), std::move(out), substRec(t.body(), cur));
}

using Env = std::vector<std::string>;

long lookup(const Env& env, const std::string& name) {
  for (std::size_t i = env.size(); i-- > 0;)
    if (env[i] == name) return static_cast<long>(i);
  return -1;
}

bool alphaRec(const Term& a, const Term& b, Env& ea, Env& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::SymRef:
      return a.uri() == b.uri();
    case Term::Kind::Var: {
      long ia = lookup(ea, a.name()), ib = lookup(eb, b.name());
      if (ia < 0 && ib < 0) return a.name() == b.name();
      return ia == ib;
    }
    case Term::Kind::App: {
      if (a.args().size() != b.args().size()) return false;
      if (!alphaRec(a.head(), b.head(), ea, eb)) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!alphaRec(a.args()[i], b.args()[i], ea, eb)) return false;
      return true;
    }
    case Term::Kind::Bind:
      break;
  }
  if (a.vars().size() != b.vars().size()) return false;
  if (!alphaRec(a.binder(), b.binder(), ea, eb)) return false;
  const auto depthA = ea.size(), depthB = eb.size();
  bool ok = true;
  for (std::size_t i = 0; ok && i < a.vars().size(); ++i) {
    const auto& va = a.vars()[i];
    const auto& vb = b.vars()[i];
    if (va.type.has_value() != vb.type.has_value() || va.definiens.has_value() != vb.definiens.has_value())
      ok = false;
    else if (va.type && !alphaRec(*va.type, *vb.type, ea, eb))
      ok = false;
    else if (va.definiens && !alphaRec(*va.definiens, *vb.definiens, ea, eb))
      ok = false;
    ea.push_back(va.name);
    eb.push_back(vb.name);
  }
  ok = ok && alphaRec(a.body(), b.body(), ea, eb);
  ea.resize(depthA);
  eb.resize(depthB);
  return ok;
}

}  // namespace

Term replaceAt(const Term& t, const Position& p, const Term& replacement) {
  return replaceRec(t, p, 0, replacement);
}

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out;
  Position cur;
  collectPositions(t, cur, out);
  return out;
}

std::set<std::string> freeVars(const Term& t) {
  std::set<std::string> bound, out;
  collectFree(t, bound, out);
  return out;
}

bool occursFree(const std::string& name, const Term& t) { return freeVars(t).count(name) > 0; }

std::set<Uri> symbolsOf(const Term& t) {
  std::set<Uri> out;
  collectSymbols(t, out);
  return out;
}

Term substitute(const Term& t, const Substitution& subst) { return substRec(t, subst); }

std::string freshName(const std::string& base, const std::set<std::string>& avoid, bool allowBase) {
  if (allowBase && !avoid.count(base)) return base;
  for (std::size_t n = 1;; ++n) {
    std::string candidate = base + std::to_string(n);
    if (!avoid.count(candidate)) return candidate;
  }
}

bool alphaEq(const Term& a, const Term& b) {
  Env ea, eb;
  return alphaRec(a, b, ea, eb);
}

std::size_t termSize(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::SymRef:
    case Term::Kind::Var:
      return 1;
    case Term::Kind::App: {
      std::size_t n = 1 + termSize(t.head());
      for (const auto& a : t.args()) n += termSize(a);
      return n;
    }
    case Term::Kind::Bind: {
      std::size_t n = 1 + termSize(t.binder()) + termSize(t.body());
      for (const auto& v : t.vars())
        if (v.type) n += termSize(*v.type);
      return n;
    }
  }
  return 0;
}

}  // namespace mmtk
