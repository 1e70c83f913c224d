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

#ifndef MMTK_SERVICES_ARCHIVE_HPP
#define MMTK_SERVICES_ARCHIVE_HPP

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mmtk/checking/checker.hpp"
#include "mmtk/kernel/library.hpp"

namespace mmtk::services {

/// A project directory: `MANIFEST`, `source/`, `content/`, `relational/`.
struct Archive {
  std::filesystem::path root;
  std::string id;
  std::string ns;

  std::filesystem::path source() const { return root / "source"; }
  std::filesystem::path content() const { return root / "content"; }
  std::filesystem::path relational() const { return root / "relational"; }
  std::filesystem::path index() const { return relational() / "index.rel"; }
  /// Source files below `source/`, sorted.
  std::vector<std::filesystem::path> sourceFiles() const;
};

/// Reads `root/MANIFEST`. Throws MissingManifest.
Archive readManifest(const std::filesystem::path& root);

/// Maps URIs to archives by longest namespace prefix and serves their
/// modules to a Library: built content first, otherwise the source file
/// declaring the module.
class Catalog : public Backend {
 public:
  /// Throws DuplicateId.
  const Archive& add(Archive a);
  std::optional<Archive> find(const std::string& id) const;
  /// The archive whose namespace is the longest prefix of `u`.
  std::optional<Archive> lookup(const Uri& u) const;
  std::vector<Archive> archives() const;
  /// Content file of a module, whether or not it has been built.
  std::optional<std::filesystem::path> locate(const Uri& module) const;
  /// Forgets cached source scans of an archive.
  void invalidate(const std::string& id);

  std::vector<Module> load(const Uri& module, const Library& lib) override;

 private:
  std::optional<std::filesystem::path> sourceOf(const Archive& a, const Uri& module);

  mutable std::mutex mutex_;
  std::vector<Archive> archives_;
  std::map<std::string, std::map<Uri, std::filesystem::path>> scans_;
};

/// Reads the manifest, adds the archive to the catalog and loads an existing
/// relational index into the library. Throws MissingManifest, DuplicateId.
Archive registerArchive(Library& lib, Catalog& catalog, const std::filesystem::path& root);

/// Parses every source file, checks every module in dependency order and
/// writes `content/<Module>.json` and `relational/index.rel`. Failures are
/// collected in the report; modules that parse are written either way.
checking::CheckReport buildArchive(Library& lib, Catalog& catalog, const checking::FoundationRegistry& foundations,
                                   const Archive& a);

}  // namespace mmtk::services

#endif  // MMTK_SERVICES_ARCHIVE_HPP
