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

#include "mmtk/frontends/session.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include "mmtk/checking/lf.hpp"
#include "mmtk/kernel/wire.hpp"
#include "mmtk/syntax/parser.hpp"
#include "mmtk/syntax/render.hpp"

namespace mmtk::frontends {

Format formatFromString(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  if (s == "html") return Format::Html;
  throw Error(ErrorKind::MalformedQuery, "unknown format \"" + s + "\"; expected json, text or html");
}

nlohmann::ordered_json InferResult::toJson() const {
  nlohmann::ordered_json j;
  j["type_rendered"] = rendered;
  j["type_term"] = type ? wire::toJson(*type) : nlohmann::ordered_json(nullptr);
  return j;
}

Session::Session() : catalog_(std::make_shared<services::Catalog>()) { lib_.addBackend(catalog_); }

services::Archive Session::addArchive(const std::filesystem::path& root) {
  std::unique_lock lock(mutex_);
  return services::registerArchive(lib_, *catalog_, root);
}

checking::CheckReport Session::build(const std::string& id) {
  std::unique_lock lock(mutex_);
  auto a = catalog_->find(id);
  if (!a) throw Error(ErrorKind::NotFound, "no archive with id " + id);
  return services::buildArchive(lib_, *catalog_, foundations_, *a);
}

void Session::addFoundation(const std::string& name) {
  std::unique_lock lock(mutex_);
  if (name != "lf") throw Error(ErrorKind::NotFound, "no compiled-in foundation named " + name);
  foundations_.add(std::make_shared<checking::LFFoundation>());
}

checking::CheckReport Session::check(const Uri& module) const {
  std::shared_lock lock(mutex_);
  if (!module.isModule()) throw Error(ErrorKind::NotFound, module.str() + " is not a module");
  return checking::checkModule(lib_, foundations_, *lib_.module(module));
}

std::vector<std::pair<Uri, checking::CheckReport>> Session::checkFile(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  std::unique_lock lock(mutex_);
  std::vector<Uri> uris;
  for (auto& m : syntax::parseDocument(text.str(), lib_, std::nullopt, file.filename().string())) {
    uris.push_back(moduleUri(m));
    lib_.add(std::move(m));
  }
  std::vector<std::pair<Uri, checking::CheckReport>> out;
  for (const auto& u : uris) out.emplace_back(u, checking::checkModule(lib_, foundations_, *lib_.module(u)));
  return out;
}

syntax::Style Session::style(const std::string& name) const {
  if (!styles_.contains(name)) throw Error(ErrorKind::MalformedQuery, "unknown style \"" + name + "\"");
  return styles_.get(name);
}

Content Session::content(const Uri& u, Format format, const std::string& styleName) const {
  std::shared_lock lock(mutex_);
  const syntax::Style st = style(styleName);
  if (!u.module()) throw Error(ErrorKind::NotFound, u.str() + " names neither a module nor a constant");
  if (u.isModule()) {
    ModulePtr m = lib_.module(u);
    switch (format) {
      case Format::Json: return {wire::dump(wire::toJson(*m)), "application/json"};
      case Format::Text: return {syntax::renderModule(*m, st, lib_, syntax::Target::Text), "text/plain; charset=utf-8"};
      case Format::Html: return {syntax::renderModule(*m, st, lib_, syntax::Target::Html), "text/html; charset=utf-8"};
    }
  }
  TheoryPtr th;
  try {
    th = lib_.theory(u.moduleUri());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotFound) throw;
  }
  const Constant* c = th ? th->findConstant(*u.symbol()) : nullptr;
  if (!c) throw Error(ErrorKind::NotFound, "no constant " + u.str());
  const Declaration d = *c;
  switch (format) {
    case Format::Json: return {wire::dump(wire::toJson(d)), "application/json"};
    case Format::Text:
      return {syntax::renderDeclaration(d, th->uri, st, lib_, syntax::Target::Text) + "\n", "text/plain; charset=utf-8"};
    case Format::Html:
      return {syntax::renderDeclaration(d, th->uri, st, lib_, syntax::Target::Html) + "\n", "text/html; charset=utf-8"};
  }
  return {};
}

InferResult Session::infer(const Uri& owner, const std::string& component, const Position& position,
                           const std::string& styleName) const {
  std::shared_lock lock(mutex_);
  const syntax::Style st = style(styleName);
  if (!owner.isSymbol()) throw Error(ErrorKind::NotFound, owner.str() + " is not a constant");
  TheoryPtr th = lib_.theory(owner.moduleUri());
  const Constant* c = th->findConstant(*owner.symbol());
  if (!c) throw Error(ErrorKind::NotFound, "no constant " + owner.str());
  const std::optional<Term>* source = nullptr;
  if (component == "type")
    source = &c->type;
  else if (component == "definiens")
    source = &c->definiens;
  else
    throw Error(ErrorKind::InvalidPosition, "component must be type or definiens, not \"" + component + "\"");
  if (!*source) throw Error(ErrorKind::InvalidPosition, owner.str() + " has no " + component);

  const Term t = subterm(**source, position);
  const Context ctx = contextAt(**source, position);
  InferResult result;
  checking::FoundationPtr f = foundations_.dispatch(lib_, *th);
  if (!f) {
    result.report.error(owner, ErrorKind::NoFoundation, "no foundation applies to " + th->uri.str(), c->source);
    return result;
  }
  try {
    result.type = f->infer(lib_, *th, ctx, t);
  } catch (const Error& e) {
    result.report.error(owner, e.kind(),
                        component + " of " + owner.str() + " at position \"" + positionToString(position) + "\": " + e.message(),
                        c->source);
    return result;
  }
  syntax::RenderOptions o;
  o.owner = owner;
  o.component = component;
  o.context = ctx;
  result.rendered = syntax::renderTerm(*result.type, st, lib_, o);
  return result;
}

std::set<Uri> Session::query(const services::Query& q) const {
  std::shared_lock lock(mutex_);
  return services::evaluate(lib_, q);
}

}  // namespace mmtk::frontends
