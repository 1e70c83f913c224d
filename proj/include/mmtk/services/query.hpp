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

#ifndef MMTK_SERVICES_QUERY_HPP
#define MMTK_SERVICES_QUERY_HPP

#include <memory>
#include <set>
#include <vector>

#include "json.hpp"
#include "mmtk/kernel/library.hpp"

namespace mmtk::services {

/// JSON forms:
///   {"lookup": uri}
///   {"related": {"of": q, "relation": R, "direction": "forward"|"backward"}}
///   {"closure": {"of": q, "relations": [R...]}}
///   {"union": [q, q...]}
struct Query {
  enum class Kind { Lookup, Related, Closure, Union };
  Kind kind = Kind::Lookup;
  Uri uri;
  std::vector<std::shared_ptr<const Query>> of;
  Relation relation = Relation::Declares;
  bool backward = false;
  std::set<Relation> relations;

  static Query lookup(Uri u);
  static Query related(Query of, Relation r, bool backward = false);
  static Query closure(Query of, std::set<Relation> rs);
  static Query unite(Query a, Query b);

  /// Throws MalformedQuery.
  static Query fromJson(const nlohmann::json& j);
  nlohmann::json toJson() const;
};

/// Evaluates against the library's relational index. Throws NotFound when a
/// Lookup names a URI that neither resolves nor occurs in the index.
std::set<Uri> evaluate(const Library& lib, const Query& q);

/// The least set containing `u` closed under DependsOn, Includes and HasMeta
/// edges and under mapping symbols to their modules. Throws NotFound.
std::set<Uri> dependencyClosure(const Library& lib, const Uri& u);

/// URIs as a JSON array of strings in lexicographic order.
nlohmann::json toJson(const std::set<Uri>& uris);

}  // namespace mmtk::services

#endif  // MMTK_SERVICES_QUERY_HPP
