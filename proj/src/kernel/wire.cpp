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

#include "mmtk/kernel/wire.hpp"

namespace mmtk::wire {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::SyntaxError, "malformed JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string stringField(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' is not a string");
  return v.get<std::string>();
}

std::optional<Term> optionalTerm(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return termFromJson(j.at(key));
}

Json optionalJson(const std::optional<Term>& t) { return t ? toJson(*t) : Json(nullptr); }

Json sourceJson(const std::optional<SourceRef>& s) {
  if (!s) return nullptr;
  return Json{{"file", s->file},
              {"line", s->line},
              {"column", s->column},
              {"endLine", s->endLine},
              {"endColumn", s->endColumn}};
}

std::optional<SourceRef> sourceFromJson(const Json& j) {
  if (!j.contains("source") || j.at("source").is_null()) return std::nullopt;
  const Json& s = j.at("source");
  SourceRef r;
  r.file = stringField(s, "file");
  r.line = field(s, "line").get<std::size_t>();
  r.column = field(s, "column").get<std::size_t>();
  r.endLine = field(s, "endLine").get<std::size_t>();
  r.endColumn = field(s, "endColumn").get<std::size_t>();
  return r;
}

}  // namespace

Json toJson(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::SymRef:
      return Json{{"OMS", t.uri().str()}};
    case Term::Kind::Var:
      return Json{{"OMV", t.name()}};
    case Term::Kind::App: {
      Json arr = Json::array();
      arr.push_back(toJson(t.head()));
      for (const auto& a : t.args()) arr.push_back(toJson(a));
      return Json{{"OMA", std::move(arr)}};
    }
    case Term::Kind::Bind: {
      Json vars = Json::array();
      for (const auto& v : t.vars()) {
        Json vj = {{"name", v.name}, {"type", optionalJson(v.type)}};
        if (v.definiens) vj["definiens"] = toJson(*v.definiens);
        vars.push_back(std::move(vj));
      }
      return Json{{"OMBIND", {{"binder", toJson(t.binder())}, {"vars", std::move(vars)}, {"body", toJson(t.body())}}}};
    }
  }
  return nullptr;
}

Term termFromJson(const Json& j) {
  if (!j.is_object() || j.size() != 1) malformed("term must be a single-key object");
  if (j.contains("OMS")) return Term::sym(Uri::parse(stringField(j, "OMS")));
  if (j.contains("OMV")) return Term::var(stringField(j, "OMV"));
  if (j.contains("OMA")) {
    const Json& arr = j.at("OMA");
    if (!arr.is_array() || arr.size() < 2) malformed("OMA needs a head and at least one argument");
    std::vector<Term> args;
    for (std::size_t i = 1; i < arr.size(); ++i) args.push_back(termFromJson(arr[i]));
    return Term::app(termFromJson(arr[0]), std::move(args));
  }
  if (j.contains("OMBIND")) {
    const Json& b = j.at("OMBIND");
    const Json& vars = field(b, "vars");
    if (!vars.is_array()) malformed("OMBIND vars must be an array");
    std::vector<VarDecl> decls;
    for (const auto& v : vars)
      decls.push_back(VarDecl{stringField(v, "name"), optionalTerm(v, "type"), optionalTerm(v, "definiens")});
    return Term::bind(termFromJson(field(b, "binder")), std::move(decls), termFromJson(field(b, "body")));
  }
  malformed("unknown term tag");
}

Json toJson(const Notation& n) {
  return Json{{"symbol", n.symbol.str()},
              {"fixity", std::string(to_string(n.fixity))},
              {"delimiter", n.delimiter},
              {"precedence", n.precedence},
              {"arity", n.arity}};
}

Notation notationFromJson(const Json& j) {
  Notation n;
  n.symbol = Uri::parse(stringField(j, "symbol"));
  auto f = fixityFromString(stringField(j, "fixity"));
  if (!f) malformed("unknown fixity");
  n.fixity = *f;
  n.delimiter = stringField(j, "delimiter");
  n.precedence = field(j, "precedence").get<int>();
  n.arity = field(j, "arity").get<int>();
  n.validate();
  return n;
}

Json toJson(const Declaration& d) {
  if (const auto* c = std::get_if<Constant>(&d)) {
    return Json{{"constant",
                 {{"name", c->name},
                  {"type", optionalJson(c->type)},
                  {"definiens", optionalJson(c->definiens)},
                  {"notation", c->notation ? toJson(*c->notation) : Json(nullptr)},
                  {"source", sourceJson(c->source)}}}};
  }
  const auto& inc = std::get<Include>(d);
  return Json{{"include", {{"from", inc.from.str()}, {"source", sourceJson(inc.source)}}}};
}

Declaration declarationFromJson(const Json& j) {
  if (j.contains("constant")) {
    const Json& c = j.at("constant");
    Constant out;
    out.name = stringField(c, "name");
    out.type = optionalTerm(c, "type");
    out.definiens = optionalTerm(c, "definiens");
    if (c.contains("notation") && !c.at("notation").is_null()) out.notation = notationFromJson(c.at("notation"));
    out.source = sourceFromJson(c);
    return out;
  }
  if (j.contains("include")) {
    const Json& i = j.at("include");
    return Include{Uri::parse(stringField(i, "from")), sourceFromJson(i)};
  }
  malformed("unknown declaration tag");
}

Json toJson(const Module& m) {
  if (const auto* t = std::get_if<Theory>(&m)) {
    Json decls = Json::array();
    for (const auto& d : t->declarations) decls.push_back(toJson(d));
    return Json{{"theory",
                 {{"uri", t->uri.str()},
                  {"meta", t->meta ? Json(t->meta->str()) : Json(nullptr)},
                  {"declarations", std::move(decls)},
                  {"source", sourceJson(t->source)}}}};
  }
  const auto& v = std::get<View>(m);
  Json assignments = Json::object();
  for (const auto& [name, term] : v.assignments) assignments[name] = toJson(term);
  return Json{{"view",
               {{"uri", v.uri.str()},
                {"from", v.from.str()},
                {"to", v.to.str()},
                {"assignments", std::move(assignments)},
                {"source", sourceJson(v.source)}}}};
}

Module moduleFromJson(const Json& j) {
  if (j.contains("theory")) {
    const Json& t = j.at("theory");
    Theory out;
    out.uri = Uri::parse(stringField(t, "uri"));
    if (t.contains("meta") && !t.at("meta").is_null()) out.meta = Uri::parse(stringField(t, "meta"));
    const Json& decls = field(t, "declarations");
    if (!decls.is_array()) malformed("declarations must be an array");
    for (const auto& d : decls) out.declarations.push_back(declarationFromJson(d));
    out.source = sourceFromJson(t);
    return out;
  }
  if (j.contains("view")) {
    const Json& v = j.at("view");
    View out;
    out.uri = Uri::parse(stringField(v, "uri"));
    out.from = Uri::parse(stringField(v, "from"));
    out.to = Uri::parse(stringField(v, "to"));
    const Json& as = field(v, "assignments");
    if (!as.is_object()) malformed("assignments must be an object");
    for (const auto& [name, term] : as.items()) out.assignments.emplace(name, termFromJson(term));
    out.source = sourceFromJson(v);
    return out;
  }
  malformed("unknown module tag");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mmtk::wire
