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

#include "mmtk/syntax/scope.hpp"

namespace mmtk::syntax {

TheoryLookup libraryLookup(const Library& lib) {
  return [&lib](const Uri& u) { return lib.theory(u); };
}

namespace {

void includesDfs(const Theory& t, const TheoryLookup& lookup, std::set<Uri>& seen, std::vector<Uri>& out) {
  for (const auto& inc : t.includes()) {
    if (!seen.insert(inc).second) continue;
    TheoryPtr child = lookup(inc);
    out.push_back(inc);
    includesDfs(*child, lookup, seen, out);
  }
}

}  // namespace

std::vector<Uri> visibleModules(const Theory& t, const TheoryLookup& lookup) {
  std::vector<Uri> out;
  std::set<Uri> seen{t.uri};
  includesDfs(t, lookup, seen, out);
  std::optional<Uri> meta = t.meta;
  while (meta && seen.insert(*meta).second) {
    TheoryPtr m = lookup(*meta);
    out.push_back(*meta);
    includesDfs(*m, lookup, seen, out);
    meta = m->meta;
  }
  return out;
}

Scope::Scope(const Theory& theory, const TheoryLookup& lookup) : ns_(theory.uri.ns()) {
  modules_.push_back(theory.uri);
  addTheory(theory, false);
  for (const auto& u : visibleModules(theory, lookup)) {
    modules_.push_back(u);
    addTheory(*lookup(u), false);
  }
}

void Scope::addTheory(const Theory& t, bool overrideExisting) {
  for (const auto& d : t.declarations) {
    const auto* c = std::get_if<Constant>(&d);
    if (!c) continue;
    if (overrideExisting)
      declareLocal(t.uri, *c);
    else {
      Uri u = t.uri / c->name;
      names_.emplace(c->name, u);
      if (c->notation) {
        notations_.emplace(u, *c->notation);
        delimiters_.emplace(c->notation->delimiter, u);
      }
    }
  }
}

void Scope::declareLocal(const Uri& theory, const Constant& c) {
  Uri u = theory / c.name;
  names_.insert_or_assign(c.name, u);
  if (c.notation) {
    notations_.insert_or_assign(u, *c.notation);
    delimiters_.insert_or_assign(c.notation->delimiter, u);
  }
}

std::optional<Uri> Scope::lookup(const std::string& name) const {
  if (auto it = names_.find(name); it != names_.end()) return it->second;
  return std::nullopt;
}

const Notation* Scope::notationFor(const Uri& symbol) const {
  auto it = notations_.find(symbol);
  return it == notations_.end() ? nullptr : &it->second;
}

const Notation* Scope::notationByDelimiter(const std::string& delimiter) const {
  auto it = delimiters_.find(delimiter);
  if (it == delimiters_.end()) return nullptr;
  return notationFor(it->second);
}

}  // namespace mmtk::syntax
