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

#ifndef MMTK_KERNEL_LIBRARY_HPP
#define MMTK_KERNEL_LIBRARY_HPP

#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <variant>
#include <vector>

#include "mmtk/kernel/module.hpp"

namespace mmtk {

class Library;

enum class Relation { Declares, Includes, HasMeta, HasDomain, HasCodomain, DependsOn };

std::string_view to_string(Relation r);
std::optional<Relation> relationFromString(std::string_view s);

struct RelationalTriple {
  Uri subject;
  Relation relation = Relation::Declares;
  Uri object;

  auto operator<=>(const RelationalTriple&) const = default;
  bool operator==(const RelationalTriple&) const = default;
};

/// Storage that can produce modules on demand.
class Backend {
 public:
  virtual ~Backend() = default;
  /// Modules obtained while looking for `module` (a module-level URI). The
  /// result is empty when this backend does not know the module; otherwise it
  /// contains it, possibly together with modules stored alongside it.
  virtual std::vector<Module> load(const Uri& module, const Library& lib) = 0;
};

using ModulePtr = std::shared_ptr<const Module>;
using TheoryPtr = std::shared_ptr<const Theory>;
using ViewPtr = std::shared_ptr<const View>;
using ConstantPtr = std::shared_ptr<const Constant>;
using Resolved = std::variant<TheoryPtr, ViewPtr, ConstantPtr>;

/// In-memory module store with transparent loading from registered backends.
///
/// Safe for concurrent readers. Loading is serialized; a module is only
/// visible once completely loaded.
class Library {
 public:
  Library() = default;
  Library(const Library&) = delete;
  Library& operator=(const Library&) = delete;

  void addBackend(std::shared_ptr<Backend> backend);

  /// Inserts or replaces a module.
  void add(Module m);
  void remove(const Uri& module);
  void removeIf(const std::function<bool(const Uri&)>& pred);
  /// True iff the module is in memory (does not load).
  bool isLoaded(const Uri& module) const;
  std::vector<Uri> loadedModules() const;

  /// Returns the module, loading it through the backends if needed.
  /// Throws NotFound.
  ModulePtr module(const Uri& u) const;
  TheoryPtr theory(const Uri& u) const;
  ViewPtr view(const Uri& u) const;
  ConstantPtr constant(const Uri& symbol) const;
  Resolved resolve(const Uri& u) const;

  /// Number of successful backend loads since construction.
  std::size_t backendLoads() const { return backendLoads_.load(); }

  void addTriples(const std::set<RelationalTriple>& triples);
  void removeTriplesWhere(const std::function<bool(const RelationalTriple&)>& pred);
  std::set<RelationalTriple> triples() const;

 private:
  mutable std::shared_mutex mutex_;
  mutable std::recursive_mutex loadMutex_;
  mutable std::map<Uri, ModulePtr> modules_;
  mutable std::set<Uri> loading_;
  std::vector<std::shared_ptr<Backend>> backends_;
  std::set<RelationalTriple> index_;
  mutable std::atomic<std::size_t> backendLoads_{0};
};

inline Resolved resolve(const Library& lib, const Uri& u) { return lib.resolve(u); }

}  // namespace mmtk

#endif  // MMTK_KERNEL_LIBRARY_HPP
