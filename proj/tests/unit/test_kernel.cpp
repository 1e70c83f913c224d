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

#include "doctest.h"

#include <map>
#include <thread>

#include "mmtk/kernel/library.hpp"
#include "mmtk/kernel/wire.hpp"
#include "support/de_bruijn.hpp"
#include "support/random_terms.hpp"

using namespace mmtk;

namespace {

const Uri kT = Uri::parse("http://t.org?T");
Term sym(const char* n) { return Term::sym(kT / n); }
Term var(const char* n) { return Term::var(n); }
VarDecl decl(const char* n, Term type) { return VarDecl{n, type, std::nullopt}; }

ErrorKind kindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an mmtk::Error");
  return ErrorKind::Io;
}

// Walks every position with its scope; independent of contextAt's
// path-walking implementation.
void scopes(const Term& t, Position& pos, std::vector<VarDecl>& scope,
            std::map<Position, std::vector<VarDecl>>& out) {
  out[pos] = scope;
  auto go = [&](std::size_t i, const Term& c) {
    pos.push_back(i);
    scopes(c, pos, scope, out);
    pos.pop_back();
  };
  if (t.isApp()) {
    go(0, t.head());
    for (std::size_t i = 0; i < t.args().size(); ++i) go(i + 1, t.args()[i]);
  } else if (t.isBind()) {
    go(0, t.binder());
    const auto before = scope.size();
    for (std::size_t i = 0; i < t.vars().size(); ++i) {
      if (t.vars()[i].type) go(i + 1, *t.vars()[i].type);
      scope.push_back(t.vars()[i]);
    }
    go(t.vars().size() + 1, t.body());
    scope.resize(before);
  }
}

}  // namespace

TEST_CASE("parseUri splits on at most two separators") {
  Uri u = parseUri("http://ex.org/lf?LF?type");
  CHECK(u.ns() == "http://ex.org/lf");
  CHECK(u.module() == "LF");
  CHECK(u.symbol() == "type");

  Uri m = parseUri("http://ex.org/logics?FOL");
  CHECK(m.ns() == "http://ex.org/logics");
  CHECK(m.module() == "FOL");
  CHECK_FALSE(m.symbol().has_value());

  CHECK(kindOf([] { parseUri("a?b?c?d"); }) == ErrorKind::MalformedUri);
  CHECK(kindOf([] { parseUri("http://x.org??c"); }) == ErrorKind::MalformedUri);
  CHECK(kindOf([] { parseUri("bogus??"); }) == ErrorKind::MalformedUri);
  CHECK(kindOf([] { parseUri("relative/path?M"); }) == ErrorKind::MalformedUri);
  CHECK(kindOf([] { parseUri(""); }) == ErrorKind::MalformedUri);
  CHECK(kindOf([] { Uri("http://x.org", std::nullopt, std::string("s")); }) == ErrorKind::MalformedUri);
  CHECK(kindOf([] { Uri("http://x.org", std::string("a b")); }) == ErrorKind::MalformedUri);
}

TEST_CASE("URI print/parse round trip on generated URIs") {
  std::mt19937 rng(7);
  const std::string alphabet = "abcXYZ019_-+*∘.";
  auto name = [&] {
    std::string s;
    int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) s += alphabet[rng() % alphabet.size()];
    return s;
  };
  for (int i = 0; i < 300; ++i) {
    std::string ns = "http://" + name() + ".org/" + name();
    std::optional<std::string> mod, symb;
    if (rng() % 3) mod = name();
    if (mod && rng() % 2) symb = name();
    Uri u(ns, mod, symb);
    CHECK(parseUri(printUri(u)) == u);
    CHECK(printUri(parseUri(u.str())) == u.str());
  }
}

TEST_CASE("subterm follows the indexing scheme") {
  Term f = sym("f"), a = sym("a"), b = sym("b"), A = sym("A");
  CHECK(subterm(Term::app(f, {a, b}), {2}) == b);
  CHECK(subterm(Term::app(f, {a, b}), {0}) == f);
  Term lam = Term::bind(sym("lam"), {decl("x", A)}, var("x"));
  CHECK(subterm(lam, {1}) == A);
  CHECK(subterm(lam, {2}) == var("x"));
  CHECK(subterm(lam, {}) == lam);
  CHECK(kindOf([] { subterm(Term::var("x"), {0}); }) == ErrorKind::InvalidPosition);
  CHECK(kindOf([&] { subterm(Term::app(f, {a}), {2}); }) == ErrorKind::InvalidPosition);
  Term untyped = Term::bind(sym("lam"), {VarDecl{"x", std::nullopt, std::nullopt}}, var("x"));
  CHECK(kindOf([&] { subterm(untyped, {1}); }) == ErrorKind::InvalidPosition);
}

TEST_CASE("contextAt collects binders in scope") {
  Term A = sym("A"), B = sym("B"), lam = sym("lam");
  Term t1 = Term::bind(lam, {decl("x", A)}, var("x"));
  CHECK(contextAt(t1, {2}).decls() == std::vector<VarDecl>{decl("x", A)});
  CHECK(contextAt(t1, {1}).empty());
  CHECK(contextAt(t1, {0}).empty());

  Term t2 = Term::bind(lam, {decl("x", A)}, Term::bind(lam, {decl("y", B)}, Term::app(var("x"), {var("y")})));
  CHECK(contextAt(t2, {2, 2, 1}).decls() == std::vector<VarDecl>{decl("x", A), decl("y", B)});

  Term multi = Term::bind(lam, {decl("x", A), decl("y", var("x"))}, var("y"));
  CHECK(contextAt(multi, {2}).decls() == std::vector<VarDecl>{decl("x", A)});
  CHECK(contextAt(multi, {3}).size() == 2);
  CHECK(kindOf([&] { contextAt(t1, {5}); }) == ErrorKind::InvalidPosition);
}

TEST_CASE("contextAt agrees with a scope-tracking traversal on generated terms") {
  testing::RandomTerms gen(11);
  for (int i = 0; i < 200; ++i) {
    Term t = gen.term(5);
    std::map<Position, std::vector<VarDecl>> expected;
    Position pos;
    std::vector<VarDecl> scope;
    scopes(t, pos, scope, expected);
    auto all = positions(t);
    REQUIRE(all.size() == expected.size());
    for (const auto& p : all) CHECK(contextAt(t, p).decls() == expected.at(p));
  }
}

TEST_CASE("positions are valid and prefix-closed") {
  testing::RandomTerms gen(3);
  for (int i = 0; i < 200; ++i) {
    Term t = gen.term(5);
    auto all = positions(t);
    std::set<Position> set(all.begin(), all.end());
    CHECK(set.size() == all.size());
    for (const auto& p : all) {
      CHECK_NOTHROW(subterm(t, p));
      if (!p.empty()) CHECK(set.count(Position(p.begin(), p.end() - 1)) == 1);
    }
  }
}

TEST_CASE("substitute examples") {
  Term f = sym("f"), g = sym("g"), a = sym("a"), A = sym("A"), lam = sym("lam");
  CHECK(substitute(Term::app(f, {var("x")}), {{"x", a}}) == Term::app(f, {a}));

  Term shadow = Term::bind(lam, {decl("x", A)}, var("x"));
  CHECK(substitute(shadow, {{"x", a}}) == shadow);

  Term capture = Term::bind(lam, {decl("x", A)}, Term::app(g, {var("y")}));
  Term expected = Term::bind(lam, {decl("x1", A)}, Term::app(g, {var("x")}));
  CHECK(substitute(capture, {{"y", var("x")}}) == expected);
  CHECK(testing::toDb(substitute(capture, {{"y", var("x")}})) ==
        testing::substDb(testing::toDb(capture), {{"y", testing::toDb(var("x"))}}));

  // x1 is taken as well, so the next suffix is used
  Term both = Term::bind(lam, {decl("x", A)}, Term::app(g, {var("y"), var("x1")}));
  Term r = substitute(both, {{"y", var("x")}});
  CHECK(r.vars()[0].name == "x2");

  // simultaneous, not sequential
  Term pair = Term::app(f, {var("x"), var("y")});
  CHECK(substitute(pair, {{"x", var("y")}, {"y", var("x")}}) == Term::app(f, {var("y"), var("x")}));
}

TEST_CASE("substitute agrees with the de Bruijn oracle") {
  testing::RandomTerms gen(2024);
  for (int i = 0; i < 500; ++i) {
    Term t = gen.term(5);
    Substitution s = gen.substitution(2);
    std::map<std::string, testing::DbTerm> sd;
    for (const auto& [k, v] : s) sd.emplace(k, testing::toDb(v));
    Term named = substitute(t, s);
    testing::DbTerm oracle = testing::substDb(testing::toDb(t), sd);
    CHECK(alphaEq(named, testing::fromDb(oracle)));
    CHECK(testing::toDb(named) == oracle);
  }
}

TEST_CASE("alphaEq examples") {
  Term A = sym("A"), B = sym("B"), lam = sym("lam");
  CHECK(alphaEq(Term::bind(lam, {decl("x", A)}, var("x")), Term::bind(lam, {decl("y", A)}, var("y"))));
  CHECK_FALSE(alphaEq(Term::bind(lam, {decl("x", A)}, var("x")), Term::bind(lam, {decl("y", B)}, var("y"))));
  CHECK_FALSE(alphaEq(var("x"), var("y")));
  // bound vs free
  CHECK_FALSE(alphaEq(Term::bind(lam, {decl("x", A)}, var("z")), Term::bind(lam, {decl("z", A)}, var("z"))));
}

TEST_CASE("alphaEq is an equivalence and survives fresh renaming") {
  testing::RandomTerms gen(99);
  std::vector<Term> terms;
  for (int i = 0; i < 60; ++i) terms.push_back(gen.term(4));
  for (const auto& a : terms) {
    CHECK(alphaEq(a, a));
    for (const auto& b : terms) {
      CHECK(alphaEq(a, b) == alphaEq(b, a));
      if (!alphaEq(a, b)) continue;
      for (const auto& c : terms)
        if (alphaEq(b, c)) CHECK(alphaEq(a, c));
    }
    // renaming a variable that is not free leaves the term unchanged up to alpha
    auto fv = freeVars(a);
    std::string fresh = freshName("w", fv, true);
    CHECK(alphaEq(substitute(a, {{fresh, var("q")}}), a));
    // renaming every free variable to a fresh one and back is the identity
    Substitution there, back;
    std::set<std::string> avoid = fv;
    for (const auto& n : fv) {
      std::string m = freshName("v", avoid);
      avoid.insert(m);
      there.insert_or_assign(n, Term::var(m));
      back.insert_or_assign(m, Term::var(n));
    }
    CHECK(alphaEq(substitute(substitute(a, there), back), a));
  }
}

TEST_CASE("wire format round trip") {
  testing::RandomTerms gen(5);
  for (int i = 0; i < 100; ++i) {
    Term t = gen.term(5);
    CHECK(wire::termFromJson(wire::toJson(t)) == t);
  }
  CHECK(wire::toJson(var("x")).dump() == R"({"OMV":"x"})");
  CHECK(wire::toJson(Term::app(sym("f"), {var("x")})).dump() ==
        R"({"OMA":[{"OMS":"http://t.org?T?f"},{"OMV":"x"}]})");
  CHECK(wire::toJson(Term::bind(sym("lam"), {VarDecl{"x", std::nullopt, std::nullopt}}, var("x"))).dump() ==
        R"({"OMBIND":{"binder":{"OMS":"http://t.org?T?lam"},"vars":[{"name":"x","type":null}],"body":{"OMV":"x"}}})");

  Theory th{kT, Uri::parse("http://t.org?M"), {}, std::nullopt};
  th.declarations.push_back(Constant{"c", sym("A"), std::nullopt,
                                     Notation{kT / "c", Fixity::InfixLeft, "+", 50, 2}, std::nullopt});
  th.declarations.push_back(Include{Uri::parse("http://t.org?U"), std::nullopt});
  Module m = th;
  CHECK(wire::moduleFromJson(wire::toJson(m)) == m);
  CHECK(kindOf([] { wire::termFromJson(wire::Json::parse(R"({"OMA":[{"OMV":"f"}]})")); }) == ErrorKind::SyntaxError);
}

namespace {

class CountingBackend : public Backend {
 public:
  std::vector<Module> load(const Uri& module, const Library&) override {
    ++calls;
    if (module == kT) {
      Theory t{kT, std::nullopt, {Constant{"c", std::nullopt, std::nullopt, std::nullopt, std::nullopt}},
               std::nullopt};
      return {t, Theory{Uri::parse("http://t.org?Side"), std::nullopt, {}, std::nullopt}};
    }
    return {};
  }
  std::atomic<int> calls{0};
};

class ShadowBackend : public Backend {
 public:
  std::vector<Module> load(const Uri& module, const Library&) override {
    if (module == kT) return {Theory{kT, Uri::parse("http://other.org?X"), {}, std::nullopt}};
    return {};
  }
};

}  // namespace

TEST_CASE("library loads lazily and at most once") {
  Library lib;
  auto backend = std::make_shared<CountingBackend>();
  lib.addBackend(backend);
  lib.addBackend(std::make_shared<ShadowBackend>());
  CHECK_FALSE(lib.isLoaded(kT));
  auto r1 = lib.theory(kT);
  auto r2 = lib.theory(kT);
  CHECK(*r1 == *r2);
  CHECK_FALSE(r1->meta.has_value());  // first registered backend wins
  CHECK(backend->calls == 1);
  CHECK(lib.isLoaded(Uri::parse("http://t.org?Side")));
  CHECK(std::holds_alternative<ConstantPtr>(lib.resolve(kT / "c")));
  CHECK(kindOf([&] { lib.resolve(kT / "d"); }) == ErrorKind::NotFound);
  CHECK(kindOf([&] { lib.resolve(Uri::parse("http://t.org?NoSuch")); }) == ErrorKind::NotFound);
  CHECK(kindOf([&] { lib.view(kT); }) == ErrorKind::NotFound);
}

TEST_CASE("library tolerates concurrent readers") {
  Library lib;
  auto backend = std::make_shared<CountingBackend>();
  lib.addBackend(backend);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&] {
      for (int k = 0; k < 100; ++k) lib.constant(kT / "c");
    });
  for (auto& t : threads) t.join();
  CHECK(backend->calls == 1);
}
