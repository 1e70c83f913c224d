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

#include "mmtk/checking/lf.hpp"

#include <set>

#include "mmtk/syntax/render.hpp"

namespace mmtk::checking {

namespace {

class Budget {
 public:
  explicit Budget(std::size_t steps) : left_(steps), total_(steps) {}
  void step() {
    if (left_ == 0)
      throw Error(ErrorKind::BudgetExceeded, "normalization exceeded " + std::to_string(total_) + " reduction steps");
    --left_;
  }

 private:
  std::size_t left_;
  std::size_t total_;
};

std::optional<Term> definiensOf(const Library* lib, const Uri& u) {
  if (!lib || !u.isSymbol()) return std::nullopt;
  try {
    return lib->constant(u)->definiens;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotFound) throw;
    return std::nullopt;
  }
}

// Applies a lambda with at least one variable to its first argument.
Term betaStep(const Term& lambda, const Term& arg) {
  const auto& vars = lambda.vars();
  const std::string& x = vars.front().name;
  if (vars.size() == 1) return substitute(lambda.body(), {{x, arg}});
  Term rest = Term::bind(lambda.binder(), std::vector<VarDecl>(vars.begin() + 1, vars.end()), lambda.body());
  return substitute(rest, {{x, arg}});
}

Term applyTo(const Term& head, std::vector<Term> args) {
  if (args.empty()) return head;
  if (head.isApp()) {
    std::vector<Term> all(head.args().begin(), head.args().end());
    all.insert(all.end(), args.begin(), args.end());
    return Term::app(head.head(), std::move(all));
  }
  return Term::app(head, std::move(args));
}

class Normalizer {
 public:
  Normalizer(const LFFoundation& lf, const Library* lib, bool full, Budget& budget)
      : lf_(lf), lib_(lib), full_(full), budget_(budget) {}

  Term norm(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Var:
        return t;
      case Term::Kind::SymRef:
        if (auto d = definiensOf(lib_, t.uri())) {
          budget_.step();
          return norm(*d);
        }
        return t;
      case Term::Kind::App:
        return app(t);
      case Term::Kind::Bind:
        return bind(t);
    }
    return t;
  }

 private:
  bool isLambda(const Term& t) const { return t.isBind() && t.binder().isSym(lf_.lambda()); }

  Term app(const Term& t) {
    if (full_ && t.head().isSym(lf_.arrow()) && t.args().size() == 2) {
      Term a = norm(t.args()[0]);
      Term b = norm(t.args()[1]);
      std::string x = freshName("x", freeVars(b), true);
      return Term::bind(Term::sym(lf_.pi()), {VarDecl{x, a, std::nullopt}}, b);
    }
    std::vector<Term> args(t.args().begin(), t.args().end());
    Term h = norm(t.head());
    while (true) {
      if (h.isApp()) {
        std::vector<Term> all(h.args().begin(), h.args().end());
        all.insert(all.end(), args.begin(), args.end());
        args = std::move(all);
        h = h.head();
      }
      if (!isLambda(h) || args.empty()) break;
      budget_.step();
      h = norm(betaStep(h, args.front()));
      args.erase(args.begin());
    }
    if (args.empty()) return h;
    for (auto& a : args) a = norm(a);
    return Term::app(h, std::move(args));
  }

  Term bind(const Term& t) {
    const auto& vars = t.vars();
    if (full_ && vars.size() > 1) {
      Term inner = Term::bind(t.binder(), std::vector<VarDecl>(vars.begin() + 1, vars.end()), t.body());
      return norm(Term::bind(t.binder(), {vars.front()}, inner));
    }
    std::vector<VarDecl> nv;
    for (const auto& v : vars) {
      VarDecl d{v.name, std::nullopt, std::nullopt};
      if (v.type) d.type = norm(*v.type);
      if (v.definiens) d.definiens = norm(*v.definiens);
      nv.push_back(std::move(d));
    }
    Term body = norm(t.body());
    if (full_ && isLambda(t) && body.isApp()) {
      const std::string& x = nv.front().name;
      auto args = body.args();
      const Term& last = args.back();
      bool contractible = last.isVar() && last.name() == x && !occursFree(x, body.head());
      for (std::size_t i = 0; contractible && i + 1 < args.size(); ++i) contractible = !occursFree(x, args[i]);
      if (contractible) {
        if (args.size() == 1) return body.head();
        return Term::app(body.head(), std::vector<Term>(args.begin(), args.end() - 1));
      }
    }
    return Term::bind(t.binder(), std::move(nv), std::move(body));
  }

  const LFFoundation& lf_;
  const Library* lib_;
  bool full_;
  Budget& budget_;
};

class Inferrer {
 public:
  Inferrer(const LFFoundation& lf, const Library& lib, const Theory& theory)
      : lf_(lf), lib_(lib), theory_(theory), budget_(lf.budget()) {}

  Term infer(const Context& ctx, const Term& t, Position& pos) {
    switch (t.kind()) {
      case Term::Kind::SymRef:
        return symbol(t.uri(), pos);
      case Term::Kind::Var: {
        const VarDecl* d = ctx.find(t.name());
        if (!d) fail(ErrorKind::UnboundVariable, "variable " + t.name() + " is not bound", pos);
        if (!d->type) fail(ErrorKind::UnboundVariable, "variable " + t.name() + " has no type", pos);
        return betaNormal(*d->type);
      }
      case Term::Kind::App:
        return application(ctx, t, pos);
      case Term::Kind::Bind:
        return binding(ctx, t, pos);
    }
    return t;
  }

  bool equal(const Term& a, const Term& b) { return alphaEq(normalize(a), normalize(b)); }

  Term normalize(const Term& t) {
    Normalizer n(lf_, &lib_, true, budget_);
    return n.norm(t);
  }

  Term betaNormal(const Term& t) {
    Normalizer n(lf_, nullptr, false, budget_);
    return n.norm(t);
  }

  std::string show(const Term& t) const {
    static const syntax::Style plain{"default", syntax::Target::Text, true, {}};
    syntax::RenderOptions o;
    o.owner = theory_.uri;
    try {
      return syntax::renderTerm(t, plain, lib_, o);
    } catch (const Error&) {
      return "<term>";
    }
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& message, const Position& pos) const {
    std::string where = pos.empty() ? "the root" : "position " + positionToString(pos);
    throw Error(kind, message + " (at " + where + ")");
  }

  bool isSort(const Term& normal, bool allowKind) const {
    return normal.isSym(lf_.type()) || (allowKind && normal.isSym(lf_.kind()));
  }

  Term symbol(const Uri& u, const Position& pos) {
    if (u == lf_.type()) return Term::sym(lf_.kind());
    if (u == lf_.kind()) fail(ErrorKind::KindError, "kind has no type", pos);
    if (u == lf_.lambda() || u == lf_.pi() || u == lf_.arrow())
      fail(ErrorKind::KindError, *u.symbol() + " is only meaningful as a binder or connective", pos);
    ConstantPtr c = lib_.constant(u);
    if (c->type) return betaNormal(*c->type);
    if (c->definiens) {
      if (!unfolding_.insert(u).second) fail(ErrorKind::KindError, "cyclic definition of " + u.str(), pos);
      Position inner;
      Term ty = infer(Context{}, *c->definiens, inner);
      unfolding_.erase(u);
      return ty;
    }
    fail(ErrorKind::UntypedConstant, "constant " + u.str() + " has neither type nor definiens", pos);
  }

  // Head normal form: unfolds definitions and beta-reduces at the head only.
  Term whnf(const Term& t) {
    Term cur = t;
    while (true) {
      if (cur.isSym()) {
        auto d = definiensOf(&lib_, cur.uri());
        if (!d) return cur;
        budget_.step();
        cur = *d;
        continue;
      }
      if (!cur.isApp()) return cur;
      Term h = whnf(cur.head());
      std::vector<Term> args(cur.args().begin(), cur.args().end());
      if (h.isBind() && h.binder().isSym(lf_.lambda())) {
        budget_.step();
        Term reduced = betaStep(h, args.front());
        args.erase(args.begin());
        cur = applyTo(reduced, std::move(args));
        continue;
      }
      return applyTo(h, std::move(args));
    }
  }

  void requireType(const Context& ctx, const Term& a, Position& pos, const char* what) {
    Term s = normalize(infer(ctx, a, pos));
    if (!isSort(s, false))
      fail(ErrorKind::KindError, std::string(what) + " " + show(a) + " must be a type, but it has sort " + show(s), pos);
  }

  Term application(const Context& ctx, const Term& t, Position& pos) {
    const auto args = t.args();
    if (t.head().isSym(lf_.arrow())) {
      if (args.size() != 2) fail(ErrorKind::KindError, "-> takes exactly two arguments", pos);
      pos.push_back(1);
      requireType(ctx, args[0], pos, "domain");
      pos.back() = 2;
      Term s = normalize(infer(ctx, args[1], pos));
      if (!isSort(s, true))
        fail(ErrorKind::KindError, "codomain " + show(args[1]) + " must be a type or kind", pos);
      pos.pop_back();
      return s;
    }
    pos.push_back(0);
    Term f = infer(ctx, t.head(), pos);
    pos.pop_back();
    for (std::size_t i = 0; i < args.size(); ++i) {
      Term dom = f, cod = f;
      std::optional<std::string> x;
      bool found = false;
      for (int attempt = 0; attempt < 2 && !found; ++attempt) {
        if (f.isBind() && f.binder().isSym(lf_.pi())) {
          const VarDecl& v = f.vars().front();
          if (!v.type) fail(ErrorKind::UnboundVariable, "Pi-bound variable " + v.name + " has no type", pos);
          dom = *v.type;
          x = v.name;
          cod = f.vars().size() == 1
                    ? f.body()
                    : Term::bind(f.binder(), std::vector<VarDecl>(f.vars().begin() + 1, f.vars().end()), f.body());
          found = true;
        } else if (f.isApp() && f.head().isSym(lf_.arrow()) && f.args().size() == 2) {
          dom = f.args()[0];
          cod = f.args()[1];
          found = true;
        } else if (attempt == 0) {
          f = whnf(f);
        }
      }
      if (!found)
        fail(ErrorKind::NotFunctionType,
             "cannot apply " + show(t.head()) + " to " + std::to_string(i + 1) + " argument(s): its type " + show(f) +
                 " is not a function type",
             pos);
      pos.push_back(i + 1);
      Term actual = infer(ctx, args[i], pos);
      if (!equal(actual, dom))
        fail(ErrorKind::TypeMismatch,
             "argument " + show(args[i]) + ": expected type " + show(dom) + ", found " + show(actual), pos);
      pos.pop_back();
      f = x ? substitute(cod, {{*x, args[i]}}) : cod;
    }
    return betaNormal(f);
  }

  Term binding(const Context& ctx, const Term& t, Position& pos) {
    const bool lambda = t.binder().isSym(lf_.lambda());
    const bool pi = t.binder().isSym(lf_.pi());
    if (!lambda && !pi) fail(ErrorKind::KindError, "unknown binder " + show(t.binder()), pos);
    Context inner = ctx;
    std::vector<VarDecl> decls(t.vars().begin(), t.vars().end());
    Term body = t.body();
    std::vector<VarDecl> out;
    for (std::size_t i = 0; i < decls.size(); ++i) {
      VarDecl d = decls[i];
      if (!d.type) fail(ErrorKind::UnboundVariable, "bound variable " + d.name + " needs a type", pos);
      pos.push_back(i + 1);
      requireType(inner, *d.type, pos, "type");
      pos.pop_back();
      if (inner.contains(d.name)) {
        std::set<std::string> avoid;
        for (const auto& c : inner) avoid.insert(c.name);
        for (const auto& v : decls) avoid.insert(v.name);
        for (const auto& n : freeVars(body)) avoid.insert(n);
        std::string fresh = freshName(d.name, avoid);
        Term renamed = Term::var(fresh);
        for (std::size_t j = i + 1; j < decls.size(); ++j)
          if (decls[j].type) decls[j].type = substitute(*decls[j].type, {{d.name, renamed}});
        bool shadowedLater = false;
        for (std::size_t j = i + 1; j < decls.size(); ++j) shadowedLater |= decls[j].name == d.name;
        if (!shadowedLater) body = substitute(body, {{d.name, renamed}});
        d.name = fresh;
      }
      inner.push(VarDecl{d.name, d.type, std::nullopt});
      out.push_back(VarDecl{d.name, d.type, std::nullopt});
    }
    pos.push_back(decls.size() + 1);
    Term b = infer(inner, body, pos);
    if (pi) {
      Term s = normalize(b);
      if (!isSort(s, true)) fail(ErrorKind::KindError, "body " + show(body) + " of Pi must be a type or kind", pos);
      pos.pop_back();
      return s;
    }
    pos.pop_back();
    return betaNormal(Term::bind(Term::sym(lf_.pi()), std::move(out), b));
  }

  const LFFoundation& lf_;
  const Library& lib_;
  const Theory& theory_;
  Budget budget_;
  std::set<Uri> unfolding_;
};

}  // namespace

LFFoundation::LFFoundation(Uri lf, std::size_t budget) : lf_(std::move(lf)), budget_(budget) {}

Term LFFoundation::infer(const Library& lib, const Theory& theory, const Context& ctx, const Term& t) const {
  Inferrer inf(*this, lib, theory);
  Position pos;
  return inf.infer(ctx, t, pos);
}

bool LFFoundation::check(const Library& lib, const Theory& theory, const Context& ctx, const Term& t,
                         const Term& type) const {
  Inferrer inf(*this, lib, theory);
  Position pos;
  try {
    return inf.equal(inf.infer(ctx, t, pos), type);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded) throw;
    return false;
  }
}

bool LFFoundation::equal(const Library& lib, const Theory& theory, const Context&, const Term& a,
                         const Term& b) const {
  Inferrer inf(*this, lib, theory);
  return inf.equal(a, b);
}

bool LFFoundation::isUniverse(const Library& lib, const Theory&, const Context&, const Term& sort) const {
  Term s = normalize(lib, sort);
  return s.isSym(type()) || s.isSym(kind());
}

bool LFFoundation::isPrimitive(const Uri& u) const {
  return u == type() || u == lambda() || u == pi() || u == arrow();
}

Term LFFoundation::normalize(const Library& lib, const Term& t) const {
  Budget b(budget_);
  Normalizer n(*this, &lib, true, b);
  return n.norm(t);
}

Term LFFoundation::betaNormal(const Term& t) const {
  Budget b(budget_);
  Normalizer n(*this, nullptr, false, b);
  return n.norm(t);
}

}  // namespace mmtk::checking
