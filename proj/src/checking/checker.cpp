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

#include "mmtk/checking/checker.hpp"

#include <algorithm>
#include <map>

#include "mmtk/syntax/render.hpp"

namespace mmtk::checking {

namespace {

std::string show(const Library& lib, const Uri& owner, const Term& t) {
  static const syntax::Style style{"default", syntax::Target::Text, true, {}};
  syntax::RenderOptions o;
  o.owner = owner;
  try {
    return syntax::renderTerm(t, style, lib, o);
  } catch (const Error&) {
    return "<term>";
  }
}

// Whether the definiens of `start` reaches `start` again through definientia.
bool definitionCycle(const Library& lib, const Uri& start, const Term& definiens) {
  const std::set<Uri> direct = symbolsOf(definiens);
  std::vector<Uri> todo(direct.begin(), direct.end());
  std::set<Uri> seen;
  while (!todo.empty()) {
    Uri u = todo.back();
    todo.pop_back();
    if (u == start) return true;
    if (!seen.insert(u).second) continue;
    ConstantPtr c;
    try {
      c = lib.constant(u);
    } catch (const Error&) {
      continue;
    }
    if (c->definiens)
      for (const auto& s : symbolsOf(*c->definiens)) todo.push_back(s);
  }
  return false;
}

// Names, visibility and free variables of one term. Returns false on failure.
bool structural(const Library& lib, const std::set<Uri>& visible, const Term& t, const Uri& subject,
                const std::string& component, const std::optional<SourceRef>& src, CheckReport& report) {
  bool ok = true;
  for (const auto& x : freeVars(t)) {
    report.error(subject, ErrorKind::UnboundVariable, component + " of " + subject.str() + " has free variable " + x, src);
    report.errors.back().component = component;
    ok = false;
  }
  for (const auto& s : symbolsOf(t)) {
    if (!s.isSymbol() || !visible.count(s.moduleUri())) {
      report.error(subject, ErrorKind::UnresolvedName, s.str() + " is not visible in " + component + " of " + subject.str(), src);
      report.errors.back().component = component;
      ok = false;
      continue;
    }
    try {
      lib.constant(s);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFound) throw;
      report.error(subject, ErrorKind::UnresolvedName, s.str() + " is not declared (" + component + " of " + subject.str() + ")", src);
      report.errors.back().component = component;
      ok = false;
    }
  }
  return ok;
}

void recordFailure(CheckReport& report, const Uri& subject, const std::string& component, const Error& e,
                   const std::optional<SourceRef>& src) {
  report.error(subject, e.kind(), component + " of " + subject.str() + ": " + e.message(), src);
  report.errors.back().component = component;
}

void mismatchAtRoot(CheckReport& report, const Uri& subject, const std::string& what, const std::string& expected,
                    const std::string& found, const std::optional<SourceRef>& src) {
  report.error(subject, ErrorKind::TypeMismatch,
               what + " of " + subject.str() + ": expected type " + expected + ", found " + found +
                   " (at the definiens root)",
               src);
  report.errors.back().component = "definiens";
  report.errors.back().position = Position{};
}

class Translator {
 public:
  Translator(const Library& lib, const View& v) : v_(v) {
    for (const auto& fc : flatten(lib, *lib.theory(v.from))) domain_.insert(fc.origin);
  }

  Term operator()(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::Var:
        return t;
      case Term::Kind::SymRef: {
        const Uri& u = t.uri();
        if (!u.isSymbol() || !domain_.count(u.moduleUri())) return t;
        auto it = v_.assignments.find(*u.symbol());
        if (it == v_.assignments.end())
          throw Error(ErrorKind::MissingAssignment, "view " + v_.uri.str() + " has no assignment for " + u.str());
        return it->second;
      }
      case Term::Kind::App: {
        std::vector<Term> args;
        for (const auto& a : t.args()) args.push_back((*this)(a));
        return Term::app((*this)(t.head()), std::move(args));
      }
      case Term::Kind::Bind: {
        std::vector<VarDecl> vars;
        for (const auto& d : t.vars()) {
          VarDecl n{d.name, std::nullopt, std::nullopt};
          if (d.type) n.type = (*this)(*d.type);
          if (d.definiens) n.definiens = (*this)(*d.definiens);
          vars.push_back(std::move(n));
        }
        return Term::bind((*this)(t.binder()), std::move(vars), (*this)(t.body()));
      }
    }
    return t;
  }

 private:
  const View& v_;
  std::set<Uri> domain_;
};

}  // namespace

CheckReport checkTheory(const Library& lib, const FoundationRegistry& foundations, const Theory& t) {
  CheckReport report;
  std::set<Uri> visible;
  FoundationPtr f;
  try {
    flatten(lib, t);
  } catch (const Error& e) {
    report.add(t.uri, e, t.source);
  }
  try {
    visible = visibleTheories(lib, t);
    f = foundations.dispatch(lib, t);
  } catch (const Error& e) {
    report.add(t.uri, e, t.source);
    return report;
  }
  const bool hasConstants = std::any_of(t.declarations.begin(), t.declarations.end(),
                                        [](const Declaration& d) { return std::holds_alternative<Constant>(d); });
  if (!f && hasConstants)
    report.warning(t.uri, ErrorKind::NoFoundation, "no foundation applies to " + t.uri.str() + "; checked structurally only", t.source);

  std::set<std::string> names;
  for (const auto& d : t.declarations) {
    const auto* c = std::get_if<Constant>(&d);
    if (!c) continue;
    const Uri cu = t.uri / c->name;
    if (!names.insert(c->name).second) {
      report.error(cu, ErrorKind::DuplicateDeclaration, "constant " + c->name + " declared twice", c->source);
      continue;
    }
    bool ok = true;
    if (c->type) ok &= structural(lib, visible, *c->type, cu, "type", c->source, report);
    if (c->definiens) {
      ok &= structural(lib, visible, *c->definiens, cu, "definiens", c->source, report);
      if (definitionCycle(lib, cu, *c->definiens)) {
        report.error(cu, ErrorKind::KindError, "cyclic definition of " + cu.str(), c->source);
        ok = false;
      }
    }
    if (!c->type && !c->definiens && !(f && f->isPrimitive(cu)))
      report.warning(cu, ErrorKind::UntypedConstant, "constant " + cu.str() + " has no type", c->source);
    if (!ok || !f) continue;

    bool typeOk = true;
    if (c->type) {
      try {
        Term sort = f->infer(lib, t, Context{}, *c->type);
        if (!f->isUniverse(lib, t, Context{}, sort)) {
          report.error(cu, ErrorKind::KindError,
                       "type of " + cu.str() + " has sort " + show(lib, t.uri, sort) + ", which is not a universe",
                       c->source);
          report.errors.back().component = "type";
          typeOk = false;
        }
      } catch (const Error& e) {
        recordFailure(report, cu, "type", e, c->source);
        typeOk = false;
      }
    }
    if (c->definiens && typeOk) {
      try {
        Term found = f->infer(lib, t, Context{}, *c->definiens);
        if (c->type && !f->equal(lib, t, Context{}, found, *c->type))
          mismatchAtRoot(report, cu, "definiens", show(lib, t.uri, *c->type), show(lib, t.uri, found), c->source);
      } catch (const Error& e) {
        recordFailure(report, cu, "definiens", e, c->source);
      }
    }
  }
  return report;
}

Term applyMorphism(const Library& lib, const View& v, const Term& t) { return Translator(lib, v)(t); }

CheckReport checkView(const Library& lib, const FoundationRegistry& foundations, const View& v) {
  CheckReport report;
  TheoryPtr from, to;
  std::vector<FlatConstant> domain;
  std::set<Uri> visible;
  FoundationPtr f;
  try {
    from = lib.theory(v.from);
    to = lib.theory(v.to);
    domain = flatten(lib, *from);
    visible = visibleTheories(lib, *to);
    for (const auto& m : metaChain(lib, *from))
      if (!visible.count(m))
        report.error(v.uri, ErrorKind::NotFound,
                     "meta-theory " + m.str() + " of " + v.from.str() + " is not available in " + v.to.str(), v.source);
    f = foundations.dispatch(lib, *to);
  } catch (const Error& e) {
    report.add(v.uri, e, v.source);
    return report;
  }
  if (!f) report.warning(v.uri, ErrorKind::NoFoundation, "no foundation applies to " + v.to.str() + "; checked structurally only", v.source);

  Translator translate(lib, v);
  std::set<std::string> covered;
  for (const auto& fc : domain) {
    const Constant& c = fc.constant;
    const Uri subject = v.uri / c.name;
    covered.insert(c.name);
    auto it = v.assignments.find(c.name);
    if (it == v.assignments.end()) {
      report.error(subject, ErrorKind::MissingAssignment, "no assignment for " + fc.uri().str(), v.source);
      continue;
    }
    if (!structural(lib, visible, it->second, subject, "definiens", v.source, report) || !f || !c.type) continue;
    try {
      Term expected = translate(*c.type);
      Term found = f->infer(lib, *to, Context{}, it->second);
      if (!f->equal(lib, *to, Context{}, found, expected)) {
        mismatchAtRoot(report, subject, "assignment", show(lib, subject, expected), show(lib, subject, found), v.source);
        continue;
      }
      if (c.definiens) {
        Term translated = translate(*c.definiens);
        if (!f->check(lib, *to, Context{}, translated, expected))
          mismatchAtRoot(report, subject, "translated definiens", show(lib, subject, expected),
                         show(lib, subject, translated), v.source);
      }
    } catch (const Error& e) {
      recordFailure(report, subject, "definiens", e, v.source);
    }
  }
  for (const auto& [name, term] : v.assignments)
    if (!covered.count(name))
      report.error(v.uri / name, ErrorKind::NotFound, v.from.str() + " declares no constant " + name, v.source);
  return report;
}

CheckReport checkModule(const Library& lib, const FoundationRegistry& foundations, const Module& m) {
  if (const auto* t = std::get_if<Theory>(&m)) return checkTheory(lib, foundations, *t);
  return checkView(lib, foundations, std::get<View>(m));
}

}  // namespace mmtk::checking
