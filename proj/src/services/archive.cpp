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

#include "mmtk/services/archive.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "mmtk/kernel/wire.hpp"
#include "mmtk/services/relations.hpp"
#include "mmtk/syntax/parser.hpp"

namespace fs = std::filesystem;

namespace mmtk::services {

namespace {

std::string readFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void writeFile(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + p.string());
  out << text;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

bool hasPrefix(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

std::string relative(const Archive& a, const fs::path& p) { return p.lexically_relative(a.root).generic_string(); }

std::vector<Uri> dependencies(const Module& m) {
  if (const auto* t = std::get_if<Theory>(&m)) {
    std::vector<Uri> out = t->includes();
    if (t->meta) out.push_back(*t->meta);
    return out;
  }
  const auto& v = std::get<View>(m);
  return {v.from, v.to};
}

}  // namespace

std::vector<fs::path> Archive::sourceFiles() const {
  std::vector<fs::path> out;
  if (!fs::is_directory(source())) return out;
  for (const auto& e : fs::recursive_directory_iterator(source()))
    if (e.is_regular_file() && e.path().extension() == ".mmt") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

Archive readManifest(const fs::path& root) {
  const fs::path manifest = root / "MANIFEST";
  if (!fs::is_regular_file(manifest)) throw Error(ErrorKind::MissingManifest, "no MANIFEST in " + root.string());
  Archive a;
  a.root = fs::absolute(root).lexically_normal();
  if (a.root.has_filename() == false) a.root = a.root.parent_path();
  std::istringstream in(readFile(manifest));
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
    if (key == "id") a.id = value;
    if (key == "namespace") a.ns = value;
  }
  if (a.id.empty() || a.ns.empty())
    throw Error(ErrorKind::MissingManifest, manifest.string() + " must declare `id:` and `namespace:`");
  return a;
}

const Archive& Catalog::add(Archive a) {
  std::lock_guard lock(mutex_);
  for (const auto& b : archives_)
    if (b.id == a.id) throw Error(ErrorKind::DuplicateId, "archive " + a.id + " is already registered");
  archives_.push_back(std::move(a));
  return archives_.back();
}

std::optional<Archive> Catalog::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  for (const auto& a : archives_)
    if (a.id == id) return a;
  return std::nullopt;
}

std::optional<Archive> Catalog::lookup(const Uri& u) const {
  std::lock_guard lock(mutex_);
  const std::string s = u.str();
  const Archive* best = nullptr;
  for (const auto& a : archives_)
    if (hasPrefix(s, a.ns) && (!best || a.ns.size() > best->ns.size())) best = &a;
  if (!best) return std::nullopt;
  return *best;
}

std::vector<Archive> Catalog::archives() const {
  std::lock_guard lock(mutex_);
  return archives_;
}

std::optional<fs::path> Catalog::locate(const Uri& module) const {
  if (!module.module()) return std::nullopt;
  auto a = lookup(module);
  if (!a) return std::nullopt;
  return a->content() / (*module.module() + ".json");
}

void Catalog::invalidate(const std::string& id) {
  std::lock_guard lock(mutex_);
  scans_.erase(id);
}

std::optional<fs::path> Catalog::sourceOf(const Archive& a, const Uri& module) {
  std::lock_guard lock(mutex_);
  auto it = scans_.find(a.id);
  if (it == scans_.end()) {
    std::map<Uri, fs::path> scan;
    for (const auto& f : a.sourceFiles()) {
      try {
        for (const auto& u : syntax::scanModules(readFile(f), a.ns, relative(a, f))) scan.emplace(u, f);
      } catch (const Error&) {
        // reported when the file is built or loaded
      }
    }
    it = scans_.emplace(a.id, std::move(scan)).first;
  }
  auto found = it->second.find(module);
  if (found == it->second.end()) return std::nullopt;
  return found->second;
}

std::vector<Module> Catalog::load(const Uri& module, const Library& lib) {
  if (!module.isModule()) return {};
  auto a = lookup(module);
  if (!a) return {};
  if (auto content = locate(module); content && fs::is_regular_file(*content)) {
    Module m = wire::moduleFromJson(nlohmann::ordered_json::parse(readFile(*content)));
    if (moduleUri(m) == module) return {std::move(m)};
  }
  auto src = sourceOf(*a, module);
  if (!src) return {};
  return syntax::parseDocument(readFile(*src), lib, a->ns, relative(*a, *src));
}

Archive registerArchive(Library& lib, Catalog& catalog, const fs::path& root) {
  Archive a = catalog.add(readManifest(root));
  if (fs::is_regular_file(a.index())) lib.addTriples(parseIndex(readFile(a.index())));
  return a;
}

checking::CheckReport buildArchive(Library& lib, Catalog& catalog, const checking::FoundationRegistry& foundations,
                                   const Archive& a) {
  checking::CheckReport report;
  auto owned = [&](const Uri& u) {
    auto b = catalog.lookup(u);
    return b && b->id == a.id;
  };
  catalog.invalidate(a.id);
  lib.removeIf(owned);
  lib.removeTriplesWhere([&](const RelationalTriple& t) { return owned(t.subject); });

  fs::create_directories(a.content());
  fs::create_directories(a.relational());
  for (const auto& e : fs::directory_iterator(a.content()))
    if (e.is_regular_file() && e.path().extension() == ".json") fs::remove(e.path());
  fs::remove(a.index());

  const Uri archiveUri(a.ns);
  for (const auto& f : a.sourceFiles()) {
    const std::string rel = relative(a, f);
    const SourceRef where{rel, 1, 1, 1, 1};
    std::string text;
    std::vector<Uri> declared;
    try {
      text = readFile(f);
      declared = syntax::scanModules(text, a.ns, rel);
    } catch (const Error& e) {
      report.add(archiveUri, e, where);
      continue;
    }
    const Uri subject = declared.empty() ? archiveUri : declared.front();
    if (!declared.empty() &&
        std::all_of(declared.begin(), declared.end(), [&](const Uri& u) { return lib.isLoaded(u); }))
      continue;  // already pulled in as a dependency
    try {
      for (auto& m : syntax::parseDocument(text, lib, a.ns, rel)) lib.add(std::move(m));
    } catch (const Error& e) {
      if (e.where() && e.where()->file != rel && hasPrefix(e.where()->file, "source/"))
        report.error(subject, ErrorKind::UnresolvedName, rel + " depends on " + e.where()->file + ", which does not load",
                     where);
      else
        report.add(subject, e, where);
    }
  }

  std::vector<Uri> modules;
  for (const auto& u : lib.loadedModules())
    if (owned(u)) modules.push_back(u);

  std::vector<Uri> order;
  std::set<Uri> seen;
  std::function<void(const Uri&)> visit = [&](const Uri& u) {
    if (!seen.insert(u).second) return;
    for (const auto& d : dependencies(*lib.module(u)))
      if (std::binary_search(modules.begin(), modules.end(), d)) visit(d);
    order.push_back(u);
  };
  std::sort(modules.begin(), modules.end());
  for (const auto& u : modules) visit(u);

  std::set<RelationalTriple> triples;
  std::set<std::string> written;
  for (const auto& u : order) {
    ModulePtr m = lib.module(u);
    try {
      report.merge(checking::checkModule(lib, foundations, *m));
    } catch (const Error& e) {
      report.add(u, e);
    }
    if (!written.insert(*u.module()).second) {
      report.error(u, ErrorKind::DuplicateDeclaration, "another module of archive " + a.id + " is also named " + *u.module());
      continue;
    }
    writeFile(a.content() / (*u.module() + ".json"), wire::dump(wire::toJson(*m)));
    auto r = extractRelations(*m);
    triples.insert(r.begin(), r.end());
  }
  writeFile(a.index(), formatIndex(triples));
  lib.addTriples(triples);
  return report;
}

}  // namespace mmtk::services
