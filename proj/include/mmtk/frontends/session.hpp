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

#ifndef MMTK_FRONTENDS_SESSION_HPP
#define MMTK_FRONTENDS_SESSION_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mmtk/checking/checker.hpp"
#include "mmtk/services/archive.hpp"
#include "mmtk/services/query.hpp"
#include "mmtk/syntax/style.hpp"

namespace mmtk::frontends {

enum class Format { Json, Text, Html };

/// Throws MalformedQuery for anything but json, text and html.
Format formatFromString(const std::string& s);

struct Content {
  std::string body;
  std::string contentType;
};

struct InferResult {
  std::optional<Term> type;
  std::string rendered;
  /// Set when inference failed.
  checking::CheckReport report;

  /// {"type_rendered": ..., "type_term": ...}
  nlohmann::ordered_json toJson() const;
};

/// Library, catalog, styles and foundations shared by the shell and the
/// server. Operations that change archives are exclusive; everything else
/// runs under a shared lock.
class Session {
 public:
  Session();

  Library& library() { return lib_; }
  const Library& library() const { return lib_; }
  services::Catalog& catalog() { return *catalog_; }
  syntax::StyleRegistry& styles() { return styles_; }
  const checking::FoundationRegistry& foundations() const { return foundations_; }

  services::Archive addArchive(const std::filesystem::path& root);
  /// Throws NotFound for an unknown archive id.
  checking::CheckReport build(const std::string& id);
  /// Compiled-in foundations by name: "lf". Throws NotFound, DuplicateDeclaration.
  void addFoundation(const std::string& name);

  checking::CheckReport check(const Uri& module) const;
  /// Parses a document into the library and checks its modules.
  std::vector<std::pair<Uri, checking::CheckReport>> checkFile(const std::filesystem::path& file);

  /// A module, or the declaration of a constant. Throws NotFound and, for an
  /// unknown style, MalformedQuery.
  Content content(const Uri& u, Format format, const std::string& style) const;
  /// Subterm at `position` of the owner's component, its inferred type and
  /// that type rendered in `style`. Throws NotFound (owner), InvalidPosition
  /// (component or position), MalformedQuery (style).
  InferResult infer(const Uri& owner, const std::string& component, const Position& position,
                    const std::string& style) const;
  std::set<Uri> query(const services::Query& q) const;

 private:
  syntax::Style style(const std::string& name) const;

  mutable std::shared_mutex mutex_;
  Library lib_;
  std::shared_ptr<services::Catalog> catalog_;
  syntax::StyleRegistry styles_;
  checking::FoundationRegistry foundations_;
};

}  // namespace mmtk::frontends

#endif  // MMTK_FRONTENDS_SESSION_HPP
