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

#include "mmtk/kernel/library.hpp"

namespace mmtk {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Declares: return "Declares";
    case Relation::Includes: return "Includes";
    case Relation::HasMeta: return "HasMeta";
    case Relation::HasDomain: return "HasDomain";
    case Relation::HasCodomain: return "HasCodomain";
    case Relation::DependsOn: return "DependsOn";
  }
  return "Declares";
}

std::optional<Relation> relationFromString(std::string_view s) {
  for (auto r : {Relation::Declares, Relation::Includes, Relation::HasMeta, Relation::HasDomain,
                 Relation::HasCodomain, Relation::DependsOn})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

void Library::addBackend(std::shared_ptr<Backend> backend) {
  std::unique_lock lock(mutex_);
  backends_.push_back(std::move(backend));
}

void Library::add(Module m) {
  Uri key = moduleUri(m);
  if (!key.isModule()) throw Error(ErrorKind::MalformedUri, "module URI expected: " + key.str());
  auto ptr = std::make_shared<const Module>(std::move(m));
  std::unique_lock lock(mutex_);
  modules_[key] = std::move(ptr);
}

void Library::remove(const Uri& module) {
  std::unique_lock lock(mutex_);
  modules_.erase(module);
}

void Library::removeIf(const std::function<bool(const Uri&)>& pred) {
  std::unique_lock lock(mutex_);
  std::erase_if(modules_, [&](const auto& kv) { return pred(kv.first); });
}

bool Library::isLoaded(const Uri& module) const {
  std::shared_lock lock(mutex_);
  return modules_.count(module) > 0;
}

std::vector<Uri> Library::loadedModules() const {
  std::shared_lock lock(mutex_);
  std::vector<Uri> out;
  for (const auto& kv : modules_) out.push_back(kv.first);
  return out;
}

ModulePtr Library::module(const Uri& u) const {
  if (!u.module()) throw Error(ErrorKind::NotFound, "URI has no module part: " + u.str());
  const Uri key = u.moduleUri();
  {
    std::shared_lock lock(mutex_);
    if (auto it = modules_.find(key); it != modules_.end()) return it->second;
  }
  std::lock_guard load(loadMutex_);
  std::vector<std::shared_ptr<Backend>> backends;
  {
    std::shared_lock lock(mutex_);
    if (auto it = modules_.find(key); it != modules_.end()) return it->second;
    backends = backends_;
  }
  if (loading_.count(key)) throw Error(ErrorKind::IncludeCycle, "cyclic dependency while loading " + key.str());
  loading_.insert(key);
  struct Unmark {
    std::set<Uri>& set;
    const Uri& key;
    ~Unmark() { set.erase(key); }
  } unmark{loading_, key};

  for (const auto& backend : backends) {
    std::vector<Module> loaded = backend->load(key, *this);
    bool found = false;
    for (const auto& m : loaded) found = found || moduleUri(m) == key;
    if (!found) continue;
    ++backendLoads_;
    std::unique_lock lock(mutex_);
    for (auto& m : loaded) {
      Uri k = moduleUri(m);
      if (!modules_.count(k)) modules_.emplace(k, std::make_shared<const Module>(std::move(m)));
    }
    return modules_.at(key);
  }
  throw Error(ErrorKind::NotFound, "no module " + key.str());
}

TheoryPtr Library::theory(const Uri& u) const {
  ModulePtr m = module(u);
  if (const auto* t = std::get_if<Theory>(m.get())) return TheoryPtr(m, t);
  throw Error(ErrorKind::NotFound, u.moduleUri().str() + " is not a theory");
}

ViewPtr Library::view(const Uri& u) const {
  ModulePtr m = module(u);
  if (const auto* v = std::get_if<View>(m.get())) return ViewPtr(m, v);
  throw Error(ErrorKind::NotFound, u.moduleUri().str() + " is not a view");
}

ConstantPtr Library::constant(const Uri& symbol) const {
  if (!symbol.isSymbol()) throw Error(ErrorKind::NotFound, "not a symbol URI: " + symbol.str());
  ModulePtr m = module(symbol);
  if (const auto* t = std::get_if<Theory>(m.get()))
    if (const auto* c = t->findConstant(*symbol.symbol())) return ConstantPtr(m, c);
  throw Error(ErrorKind::NotFound, "no constant " + symbol.str());
}

Resolved Library::resolve(const Uri& u) const {
  if (u.isSymbol()) return constant(u);
  ModulePtr m = module(u);
  if (const auto* t = std::get_if<Theory>(m.get())) return TheoryPtr(m, t);
  return ViewPtr(m, &std::get<View>(*m));
}

void Library::addTriples(const std::set<RelationalTriple>& triples) {
  std::unique_lock lock(mutex_);
  index_.insert(triples.begin(), triples.end());
}

void Library::removeTriplesWhere(const std::function<bool(const RelationalTriple&)>& pred) {
  std::unique_lock lock(mutex_);
  std::erase_if(index_, pred);
}

std::set<RelationalTriple> Library::triples() const {
  std::shared_lock lock(mutex_);
  return index_;
}

}  // namespace mmtk
