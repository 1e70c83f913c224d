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

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "mmtk/checking/checker.hpp"
#include "mmtk/checking/lf.hpp"
#include "mmtk/syntax/parser.hpp"
#include "support/corpus.hpp"
#include "support/lf_terms.hpp"
#include "support/mutants.hpp"
#include "support/simple_types.hpp"

using namespace mmtk;
using namespace mmtk::checking;

namespace {

const std::string kLogics = "http://ex.org/logics";
const Uri kLF = Uri::parse("http://ex.org/lf?LF");
const Uri kFOL = Uri::parse(kLogics + "?FOL");
const Uri kIMP = Uri::parse(kLogics + "?IMP");
const Uri kIMPExt = Uri::parse(kLogics + "?IMPExt");
const Uri kGroup = Uri::parse("http://ex.org/algebra?Group");
const Uri kMonoid = Uri::parse("http://ex.org/algebra?Monoid");
const Uri kGroupAsMonoid = Uri::parse("http://ex.org/algebra?GroupAsMonoid");

ErrorKind kindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

struct World {
  Library lib;
  FoundationRegistry registry;
  std::shared_ptr<const LFFoundation> lf = std::make_shared<LFFoundation>();
  World() {
    testing::loadCorpus(lib);
    registry.add(lf);
  }
  const Theory& theory(const Uri& u) { return *lib.theory(u); }
  Term parse(const std::string& s, const Uri& scope, const Context& ctx = {}) {
    return syntax::parseTerm(s, theory(scope), lib, ctx);
  }
  void addDocument(const std::string& text, const std::string& ns) {
    for (auto& m : syntax::parseDocument(text, lib, ns)) lib.add(std::move(m));
  }
};

Term sym(const Uri& theory, const char* name) { return Term::sym(theory / name); }

bool hasKind(const std::vector<Diagnostic>& ds, ErrorKind k) {
  return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) { return d.kind == k; });
}

std::vector<Uri> origins(const std::vector<FlatConstant>& flat) {
  std::vector<Uri> out;
  for (const auto& fc : flat)
    if (out.empty() || out.back() != fc.origin) out.push_back(fc.origin);
  return out;
}

// Simple types as "o", "i", "(A>B)"; empty for anything dependent.
std::string simpleType(const LFFoundation& lf, const Term& t) {
  if (t.isSym(kFOL / "o")) return "o";
  if (t.isSym(kFOL / "i")) return "i";
  if (t.isApp() && t.head().isSym(lf.arrow()) && t.args().size() == 2) {
    auto a = simpleType(lf, t.args()[0]), b = simpleType(lf, t.args()[1]);
    return a.empty() || b.empty() ? "" : "(" + a + ">" + b + ")";
  }
  if (t.isBind() && t.binder().isSym(lf.pi()) && t.vars().size() == 1 && t.vars()[0].type &&
      !occursFree(t.vars()[0].name, t.body())) {
    auto a = simpleType(lf, *t.vars()[0].type), b = simpleType(lf, t.body());
    return a.empty() || b.empty() ? "" : "(" + a + ">" + b + ")";
  }
  return "";
}

testing::SimpleTypes simpleOracle() {
  auto f = [](const char* n) { return kFOL / n; };
  auto g = [](const char* n) { return kGroup / n; };
  testing::SimpleTypes s({{f("not"), "(o>o)"},
                          {f("and"), "(o>(o>o))"},
                          {f("or"), "(o>(o>o))"},
                          {f("nand"), "(o>(o>o))"},
                          {f("eq"), "(i>(i>o))"},
                          {f("neq"), "(i>(i>o))"},
                          {f("forall"), "((o>o)>o)"},
                          {f("foralli"), "((i>o)>o)"},
                          {g("e"), "i"},
                          {g("inv"), "(i>i)"},
                          {g("sq"), "(i>i)"},
                          {g("comp"), "(i>(i>i))"},
                          {g("conj"), "(i>(i>i))"}},
                         3);
  s.setBase(f("o"), f("i"));
  return s;
}

bool mentionsProof(const Term& t) {
  for (const auto& u : symbolsOf(t))
    if (u == kFOL / "ded" || u == kFOL / "andI" || u == kFOL / "andEl" || u == kFOL / "andEr" ||
        u == kFOL / "andSym")
      return true;
  return false;
}

}  // namespace

TEST_CASE("metaChain follows meta-theories outward") {
  World w;
  CHECK(metaChain(w.lib, w.theory(kGroup)) == std::vector<Uri>{kFOL, kLF});
  CHECK(metaChain(w.lib, w.theory(kFOL)) == std::vector<Uri>{kLF});
  CHECK(metaChain(w.lib, w.theory(kLF)).empty());

  w.lib.add(Theory{Uri::parse("http://t.org/m?A"), Uri::parse("http://t.org/m?B"), {}, {}});
  w.lib.add(Theory{Uri::parse("http://t.org/m?B"), Uri::parse("http://t.org/m?A"), {}, {}});
  CHECK(kindOf([&] { metaChain(w.lib, w.theory(Uri::parse("http://t.org/m?A"))); }) == ErrorKind::MetaCycle);
}

TEST_CASE("flatten examples") {
  World w;
  auto imp = flatten(w.lib, w.theory(kIMPExt));
  CHECK(origins(imp) == std::vector<Uri>{kIMP, kIMPExt});
  std::vector<std::string> names;
  for (const auto& fc : imp) names.push_back(fc.constant.name);
  CHECK(names == std::vector<std::string>{"imp", "impIntro", "impElim", "impRefl", "impK", "impTrans", "impI",
                                          "impE", "impSwap"});

  auto group = flatten(w.lib, w.theory(kGroup));
  CHECK(origins(group) == std::vector<Uri>{kGroup});
  CHECK(group.size() == 8);

  w.addDocument(
      "namespace http://t.org/f\n"
      "theory B : <http://ex.org/logics?FOL> = { b : o. }\n"
      "theory A : <http://ex.org/logics?FOL> = { include ?B\n a : o. }\n"
      "theory T : <http://ex.org/logics?FOL> = { include ?A\n include ?B\n t : o. }\n",
      "http://t.org/");
  const Uri A = Uri::parse("http://t.org/f?A"), B = Uri::parse("http://t.org/f?B"), T = Uri::parse("http://t.org/f?T");
  CHECK(origins(flatten(w.lib, w.theory(T))) == std::vector<Uri>{B, A, T});
}

TEST_CASE("flatten agrees with a set-union and topological-order oracle") {
  World w;
  // a layered include graph: theory k may include any theory j < k
  std::mt19937 rng(7);
  const int n = 9;
  std::map<int, std::vector<int>> inc;
  auto uri = [](int k) { return Uri::parse("http://t.org/g?T" + std::to_string(k)); };
  for (int k = 0; k < n; ++k) {
    Theory th{uri(k), kFOL, {}, {}};
    for (int j = 0; j < k; ++j)
      if (rng() % 3 == 0) {
        inc[k].push_back(j);
        th.declarations.push_back(Include{uri(j), {}});
      }
    th.declarations.push_back(Constant{"c" + std::to_string(k), Term::sym(kFOL / "o"), {}, {}, {}});
    w.lib.add(th);
  }
  for (int k = 0; k < n; ++k) {
    std::set<int> closure{k};
    std::vector<int> todo{k};
    while (!todo.empty()) {
      int x = todo.back();
      todo.pop_back();
      for (int j : inc[x])
        if (closure.insert(j).second) todo.push_back(j);
    }
    auto order = origins(flatten(w.lib, w.theory(uri(k))));
    std::set<Uri> expected;
    for (int j : closure) expected.insert(uri(j));
    CHECK(std::set<Uri>(order.begin(), order.end()) == expected);
    CHECK(order.size() == closure.size());
    CHECK(order.back() == uri(k));
    std::map<Uri, std::size_t> at;
    for (std::size_t p = 0; p < order.size(); ++p) at[order[p]] = p;
    for (int j : closure)
      for (int d : inc[j]) CHECK(at[uri(d)] < at[uri(j)]);
  }
}

TEST_CASE("flatten errors and idempotence") {
  World w;
  w.addDocument(
      "namespace http://t.org/e\n"
      "theory A : <http://ex.org/logics?FOL> = { c : o. }\n"
      "theory B : <http://ex.org/logics?FOL> = { c : i. }\n"
      "theory T : <http://ex.org/logics?FOL> = { include ?A\n include ?B\n }\n",
      "http://t.org/");
  CHECK(kindOf([&] { flatten(w.lib, w.theory(Uri::parse("http://t.org/e?T"))); }) == ErrorKind::NameClash);

  const Uri P = Uri::parse("http://t.org/e?P"), Q = Uri::parse("http://t.org/e?Q");
  w.lib.add(Theory{P, std::nullopt, {Include{Q, {}}}, {}});
  w.lib.add(Theory{Q, std::nullopt, {Include{P, {}}}, {}});
  CHECK(kindOf([&] { flatten(w.lib, w.theory(P)); }) == ErrorKind::IncludeCycle);
  CHECK(!checkTheory(w.lib, w.registry, w.theory(P)).ok());

  for (const Uri& u : {kIMPExt, kIMP, kGroup, kFOL}) {
    auto flat = flatten(w.lib, w.theory(u));
    Theory inlined{Uri::parse("http://t.org/e?Inlined"), w.theory(u).meta, {}, {}};
    for (const auto& fc : flat) inlined.declarations.push_back(fc.constant);
    w.lib.add(inlined);
    auto again = flatten(w.lib, w.theory(inlined.uri));
    REQUIRE(again.size() == flat.size());
    for (std::size_t k = 0; k < flat.size(); ++k) CHECK(again[k].constant == flat[k].constant);
  }
}

TEST_CASE("foundation dispatch is inherited along the meta chain") {
  World w;
  auto group = w.registry.dispatch(w.lib, w.theory(kGroup));
  REQUIRE(group);
  CHECK(group->name() == "lf");
  CHECK(w.registry.dispatch(w.lib, w.theory(kFOL)) == group);
  CHECK(w.registry.dispatch(w.lib, w.theory(kLF)) == group);
  CHECK(kindOf([&] { w.registry.add(std::make_shared<LFFoundation>()); }) == ErrorKind::DuplicateDeclaration);

  Theory bare{Uri::parse("http://t.org/d?Bare"), std::nullopt,
              {Constant{"c", std::nullopt, std::nullopt, {}, {}}}, {}};
  w.lib.add(bare);
  CHECK(!w.registry.dispatch(w.lib, bare));
  FoundationRegistry none;
  CHECK(!none.dispatch(w.lib, w.theory(kGroup)));
  auto r = checkTheory(w.lib, w.registry, bare);
  CHECK(r.ok());
  CHECK(hasKind(r.warnings, ErrorKind::NoFoundation));
}

TEST_CASE("lfInfer examples") {
  World w;
  const auto& fol = w.theory(kFOL);
  CHECK(alphaEq(w.lf->infer(w.lib, fol, {}, sym(kFOL, "forall")), w.parse("(o -> o) -> o", kFOL)));
  CHECK(alphaEq(w.lf->infer(w.lib, fol, {}, Term::sym(w.lf->type())), Term::sym(w.lf->kind())));

  Term id = Term::bind(Term::sym(w.lf->lambda()), {VarDecl{"x", sym(kFOL, "o"), std::nullopt}}, Term::var("x"));
  Term expected = Term::bind(Term::sym(w.lf->pi()), {VarDecl{"x", sym(kFOL, "o"), std::nullopt}}, sym(kFOL, "o"));
  CHECK(alphaEq(w.lf->infer(w.lib, fol, {}, id), expected));
  CHECK(testing::SimpleTypes(simpleOracle()).derivable({}, id) == std::set<std::string>{"(o>o)"});

  CHECK(kindOf([&] { w.lf->infer(w.lib, fol, {}, Term::app(sym(kFOL, "o"), {sym(kFOL, "o")})); }) ==
        ErrorKind::NotFunctionType);
  CHECK(kindOf([&] { w.lf->infer(w.lib, fol, {}, Term::var("y")); }) == ErrorKind::UnboundVariable);
  CHECK(kindOf([&] { w.lf->infer(w.lib, fol, {}, w.parse("¬ (i)", kFOL)); }) == ErrorKind::TypeMismatch);
  CHECK(kindOf([&] { w.lf->infer(w.lib, fol, {}, Term::sym(w.lf->lambda())); }) == ErrorKind::KindError);
  CHECK(kindOf([&] { w.lf->infer(w.lib, fol, {}, Term::sym(w.lf->kind())); }) == ErrorKind::KindError);

  Context ctx({VarDecl{"A", sym(kFOL, "o"), std::nullopt}});
  CHECK(alphaEq(w.lf->infer(w.lib, fol, ctx, w.parse("ded A", kFOL, ctx)), Term::sym(w.lf->type())));
  CHECK(alphaEq(w.lf->infer(w.lib, fol, {}, w.parse("andI", kFOL)),
                w.lf->betaNormal(w.theory(kFOL).findConstant("andI")->type.value())));
}

TEST_CASE("the inferred type of impI's definiens is its declared type") {
  World w;
  const auto& th = w.theory(kIMPExt);
  const Constant* impI = th.findConstant("impI");
  REQUIRE(impI);
  Term found = w.lf->infer(w.lib, th, {}, *impI->definiens);
  Term declared = w.parse("{A:o} {B:o} {C:o} (ded A -> ded B -> ded C) -> ded (A imp (B imp C))", kIMPExt);
  CHECK(alphaEq(declared, *impI->type));
  CHECK(w.lf->equal(w.lib, th, {}, found, declared));
  CHECK(alphaEq(w.lf->normalize(w.lib, found), w.lf->normalize(w.lib, declared)));
  CHECK(w.lf->check(w.lib, th, {}, *impI->definiens, declared));
}

TEST_CASE("lfEqual examples") {
  World w;
  const auto& fol = w.theory(kFOL);
  Context ctx({VarDecl{"a", sym(kFOL, "o"), std::nullopt}, VarDecl{"f", w.parse("o -> o", kFOL), std::nullopt},
               VarDecl{"u", sym(kFOL, "i"), std::nullopt}, VarDecl{"v", sym(kFOL, "i"), std::nullopt}});
  auto p = [&](const char* s) { return w.parse(s, kFOL, ctx); };

  CHECK(w.lf->equal(w.lib, fol, ctx, p("([x:o] x) a"), p("a")));
  CHECK(!w.lf->equal(w.lib, fol, ctx, p("([x:o] x) a"), p("f a")));
  CHECK(w.lf->equal(w.lib, fol, ctx, p("neq u v"), p("¬ (u eq v)")));
  CHECK(w.lf->equal(w.lib, fol, ctx, p("neq"), p("[x:i] [y:i] ¬ (x eq y)")));
  CHECK(!w.lf->equal(w.lib, fol, ctx, p("neq u v"), p("u eq v")));

  Term eta = p("[x:o] f x");
  CHECK(w.lf->equal(w.lib, fol, ctx, eta, p("f")));
  CHECK(w.lf->check(w.lib, fol, ctx, eta, p("o -> o")));
  CHECK(w.lf->check(w.lib, fol, ctx, p("f"), p("o -> o")));
  CHECK(!w.lf->equal(w.lib, fol, ctx, p("[x:o] f a"), p("f")));

  CHECK(w.lf->equal(w.lib, fol, ctx, p("o -> o"), p("{x:o} o")));
  CHECK(w.lf->equal(w.lib, fol, ctx, p("[x:o] [y:o] x"), p("[a:o] [b:o] a")));
  CHECK(!w.lf->equal(w.lib, fol, ctx, p("[x:o] [y:o] x"), p("[a:o] [b:o] b")));
}

TEST_CASE("reduction is bounded by the step budget") {
  World w;
  const auto& fol = w.theory(kFOL);
  Term omegaHalf = w.parse("[x:o] x x", kFOL);
  Term omega = Term::app(omegaHalf, {omegaHalf});
  CHECK(w.lf->budget() == 10000);
  CHECK(kindOf([&] { w.lf->equal(w.lib, fol, {}, omega, sym(kFOL, "o")); }) == ErrorKind::BudgetExceeded);
  CHECK(kindOf([&] { w.lf->normalize(w.lib, omega); }) == ErrorKind::BudgetExceeded);

  const Uri cyc = Uri::parse("http://t.org/c?Cyc");
  w.lib.add(Theory{cyc, kFOL,
                   {Constant{"p", sym(kFOL, "o"), Term::sym(cyc / "q"), {}, {}},
                    Constant{"q", sym(kFOL, "o"), Term::sym(cyc / "p"), {}, {}}},
                   {}});
  CHECK(kindOf([&] { w.lf->equal(w.lib, w.theory(cyc), {}, Term::sym(cyc / "p"), sym(kFOL, "o")); }) ==
        ErrorKind::BudgetExceeded);
  auto r = checkTheory(w.lib, w.registry, w.theory(cyc));
  CHECK(r.mentions(cyc / "p"));
  CHECK(r.mentions(cyc / "q"));
  CHECK(hasKind(r.errors, ErrorKind::KindError));
}

TEST_CASE("the bundled corpus checks without errors") {
  World w;
  for (const auto& u : w.lib.loadedModules()) {
    auto r = checkModule(w.lib, w.registry, *w.lib.module(u));
    INFO(u.str());
    for (const auto& d : r.errors) INFO(d.text());
    CHECK(r.ok());
    CHECK(r.warnings.empty());
  }
  for (const auto& meta : {std::optional<Uri>{}, std::optional<Uri>{kLF}, std::optional<Uri>{kFOL}}) {
    Theory empty{Uri::parse("http://t.org/x?Empty"), meta, {}, {}};
    w.lib.add(empty);
    auto r = checkTheory(w.lib, w.registry, empty);
    CHECK(r.errors.empty());
    CHECK(r.warnings.empty());
  }
}

TEST_CASE("structural failures are collected") {
  World w;
  w.addDocument(
      "namespace http://t.org/s\n"
      "theory S : <http://ex.org/logics?FOL> = {\n"
      "  a : o.\n"
      "  b : <http://ex.org/algebra?Group?e>.\n"
      "  c : <http://ex.org/logics?FOL?nope>.\n"
      "  d.\n"
      "  f : o -> o = [x:o] i.\n"
      "  g : o = o.\n"
      "}\n",
      "http://t.org/");
  const Uri S = Uri::parse("http://t.org/s?S");
  auto r = checkTheory(w.lib, w.registry, w.theory(S));
  CHECK(r.mentions(S / "b"));
  CHECK(r.mentions(S / "c"));
  CHECK(r.mentions(S / "f"));
  CHECK(r.mentions(S / "g"));
  CHECK(!r.mentions(S / "a"));
  CHECK(hasKind(r.errors, ErrorKind::UnresolvedName));
  CHECK(hasKind(r.warnings, ErrorKind::UntypedConstant));

  Theory free{Uri::parse("http://t.org/s?Free"), kFOL,
              {Constant{"h", Term::var("z"), std::nullopt, {}, {}}}, {}};
  w.lib.add(free);
  auto rf = checkTheory(w.lib, w.registry, free);
  CHECK(hasKind(rf.errors, ErrorKind::UnboundVariable));
  CHECK(kindOf([&] { w.lf->infer(w.lib, w.theory(S), {}, Term::sym(S / "d")); }) == ErrorKind::UntypedConstant);
}

TEST_CASE("swapping A and C in impI's type is a mismatch at the definiens root") {
  World w;
  Theory th = w.theory(kIMPExt);
  for (auto& d : th.declarations)
    if (auto* c = std::get_if<Constant>(&d); c && c->name == "impI")
      c->type = w.parse("{A:o} {B:o} {C:o} (ded C -> ded B -> ded A) -> ded (C imp (B imp A))", kIMPExt);
  w.lib.add(th);
  auto r = checkTheory(w.lib, w.registry, th);
  bool found = false;
  for (const auto& d : r.errors)
    if (d.uri == kIMPExt / "impI" && d.kind == ErrorKind::TypeMismatch) {
      found = true;
      CHECK(d.component == "definiens");
      CHECK(d.position == Position{});
      CHECK(d.message.find("definiens root") != std::string::npos);
    }
  CHECK(found);
}

TEST_CASE("every single type mutation is reported against the mutated constant") {
  auto mutants = [] {
    World w;
    return testing::typeMutants(w.lib);
  }();
  CHECK(mutants.size() >= 10);
  for (const auto& m : mutants) {
    World w;
    w.lib.add(m.theory);
    auto r = checkTheory(w.lib, w.registry, w.theory(m.theory.uri));
    INFO(m.constant.str());
    CHECK(r.mentions(m.constant));
  }
}

TEST_CASE("applyMorphism examples") {
  World w;
  const View& v = *w.lib.view(kGroupAsMonoid);
  Term x = Term::var("x");
  CHECK(applyMorphism(w.lib, v, Term::app(sym(kMonoid, "square"), {x})) ==
        Term::app(v.assignments.at("square"), {x}));
  CHECK(applyMorphism(w.lib, v, sym(kMonoid, "unit")) == sym(kGroup, "e"));
  CHECK(applyMorphism(w.lib, v, Term::sym(w.lf->lambda())) == Term::sym(w.lf->lambda()));
  CHECK(applyMorphism(w.lib, v, sym(kFOL, "eq")) == sym(kFOL, "eq"));

  View partial = v;
  partial.assignments.erase("unit");
  CHECK(kindOf([&] { applyMorphism(w.lib, partial, sym(kMonoid, "unit")); }) == ErrorKind::MissingAssignment);
  CHECK(applyMorphism(w.lib, partial, sym(kMonoid, "mult")) == v.assignments.at("mult"));

  // identity views
  for (const Uri& t : {kGroup, kIMPExt, kMonoid}) {
    View id{Uri::parse("http://t.org/v?Id"), t, t, {}, {}};
    for (const auto& fc : flatten(w.lib, w.theory(t))) id.assignments.insert_or_assign(fc.constant.name, Term::sym(fc.uri()));
    w.lib.add(id);
    for (const auto& ot : testing::corpusTerms(w.lib))
      if (ot.owner.moduleUri() == t || ot.owner.moduleUri() == kFOL) CHECK(alphaEq(applyMorphism(w.lib, id, ot.term), ot.term));
    CHECK(checkView(w.lib, w.registry, id).ok());
  }
}

TEST_CASE("checkView examples") {
  World w;
  const View& v = *w.lib.view(kGroupAsMonoid);
  auto ok = checkView(w.lib, w.registry, v);
  for (const auto& d : ok.errors) INFO(d.text());
  CHECK(ok.ok());

  // the assignments hand-check
  const auto& group = w.theory(kGroup);
  CHECK(alphaEq(w.lf->infer(w.lib, group, {}, v.assignments.at("unit")), sym(kFOL, "i")));
  CHECK(w.lf->equal(w.lib, group, {}, w.lf->infer(w.lib, group, {}, v.assignments.at("mult")),
                    w.parse("i -> i -> i", kGroup)));

  View missing = v;
  missing.assignments.erase("neutral");
  auto rm = checkView(w.lib, w.registry, missing);
  CHECK(hasKind(rm.errors, ErrorKind::MissingAssignment));
  CHECK(rm.mentions(kGroupAsMonoid / "neutral"));

  View wrong = v;
  wrong.assignments.insert_or_assign("unit", w.parse("[x:i] x", kGroup));
  auto rw = checkView(w.lib, w.registry, wrong);
  CHECK(hasKind(rw.errors, ErrorKind::TypeMismatch));
  CHECK(rw.mentions(kGroupAsMonoid / "unit"));

  View wrongDef = v;
  wrongDef.assignments.insert_or_assign("square", w.parse("[x:i] x ∘ e", kGroup));
  CHECK(checkView(w.lib, w.registry, wrongDef).ok());  // equality is not decided up to axioms

  View extra = v;
  extra.assignments.insert_or_assign("nosuch", sym(kGroup, "e"));
  auto re = checkView(w.lib, w.registry, extra);
  CHECK(hasKind(re.errors, ErrorKind::NotFound));
}

TEST_CASE("views preserve typing at term level") {
  World w;
  std::size_t views = 0, constants = 0;
  for (const auto& u : w.lib.loadedModules()) {
    ModulePtr m = w.lib.module(u);
    const auto* v = std::get_if<View>(m.get());
    if (!v || !checkView(w.lib, w.registry, *v).ok()) continue;
    ++views;
    const auto& to = w.theory(v->to);
    for (const auto& fc : flatten(w.lib, w.theory(v->from))) {
      if (!fc.constant.type) continue;
      ++constants;
      Term type = applyMorphism(w.lib, *v, *fc.constant.type);
      INFO(fc.uri().str());
      CHECK(w.lf->check(w.lib, to, {}, applyMorphism(w.lib, *v, Term::sym(fc.uri())), type));
      if (fc.constant.definiens) CHECK(w.lf->check(w.lib, to, {}, applyMorphism(w.lib, *v, *fc.constant.definiens), type));
    }
  }
  CHECK(views >= 1);
  CHECK(constants >= 4);
}

TEST_CASE("generated well-typed terms: subject reduction and soundness") {
  World w;
  const auto& group = w.theory(kGroup);
  testing::LfTerms gen(2024);
  for (int k = 0; k < 200; ++k) {
    Term t = gen.wellTyped(1 + k % 4);
    INFO(k);
    Term a = w.lf->infer(w.lib, group, {}, t);
    Term b = w.lf->infer(w.lib, group, {}, w.lf->betaNormal(t));
    CHECK(alphaEq(a, b));
    CHECK(w.lf->check(w.lib, group, {}, t, a));
  }
}

TEST_CASE("generated ill-typed terms are rejected") {
  World w;
  const auto& group = w.theory(kGroup);
  testing::LfTerms gen(99);
  for (int k = 0; k < 50; ++k) {
    Term t = gen.illTyped(1 + k % 4);
    INFO(k);
    bool rejected = false;
    try {
      w.lf->infer(w.lib, group, {}, t);
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::TypeMismatch || e.kind() == ErrorKind::NotFunctionType;
    }
    CHECK(rejected);
  }
}

TEST_CASE("inference agrees with a simple-type derivation enumerator") {
  World w;
  const auto& group = w.theory(kGroup);
  auto oracle = simpleOracle();
  CHECK(oracle.universe().size() == 22);
  testing::LfTerms gen(5);
  int compared = 0;
  for (int k = 0; k < 300 && compared < 120; ++k) {
    Term t = gen.wellTyped(1 + k % 3);
    if (mentionsProof(t)) continue;
    std::string inferred = simpleType(*w.lf, w.lf->infer(w.lib, group, {}, t));
    REQUIRE(!inferred.empty());
    CHECK(oracle.derivable({}, t) == std::set<std::string>{inferred});
    ++compared;
  }
  CHECK(compared >= 100);

  testing::LfTerms bad(6);
  for (int k = 0; k < 40; ++k) {
    Term t = bad.illTyped(1 + k % 3);
    if (mentionsProof(t)) continue;
    CHECK(oracle.derivable({}, t).empty());
  }
}

TEST_CASE("check reports serialize to the error JSON shape") {
  World w;
  CheckReport r;
  r.error(kGroup / "e", ErrorKind::TypeMismatch, "bad", SourceRef{"f.mmt", 3, 4});
  r.warning(kGroup, ErrorKind::NoFoundation, "none");
  auto j = toJson(r);
  REQUIRE(j.size() == 2);
  CHECK(j[0].dump() ==
        R"({"uri":"http://ex.org/algebra?Group?e","line":3,"message":"TypeMismatch: bad","severity":"error"})");
  CHECK(j[1]["line"].is_null());
  CHECK(j[1]["severity"] == "warning");
  CHECK(!r.ok());
  CHECK(r.mentions(kGroup / "e"));
  CHECK(!r.mentions(kGroup));
}
