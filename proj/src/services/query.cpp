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

#include "mmtk/services/query.hpp"

#include <algorithm>
#include <map>

namespace mmtk::services {

namespace {

using Edges = std::map<Uri, std::vector<Uri>>;

struct Index {
  std::set<RelationalTriple> triples;
  std::set<Uri> mentioned;

  explicit Index(const Library& lib) : triples(lib.triples()) {
    for (const auto& t : triples) {
      mentioned.insert(t.subject);
      mentioned.insert(t.object);
    }
  }

  Edges edges(const std::set<Relation>& rs, bool backward) const {
    Edges out;
    for (const auto& t : triples)
      if (rs.count(t.relation)) {
        if (backward)
          out[t.object].push_back(t.subject);
        else
          out[t.subject].push_back(t.object);
      }
    return out;
  }
};

bool known(const Library& lib, const Index& index, const Uri& u) {
  if (index.mentioned.count(u)) return true;
  try {
    lib.resolve(u);
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotFound) throw;
    return false;
  }
}

std::set<Uri> close(std::set<Uri> start, const Edges& edges, bool owners) {
  std::vector<Uri> todo(start.begin(), start.end());
  while (!todo.empty()) {
    Uri u = todo.back();
    todo.pop_back();
    std::vector<Uri> next;
    if (auto it = edges.find(u); it != edges.end()) next = it->second;
    if (owners && u.isSymbol()) next.push_back(u.moduleUri());
    for (const auto& n : next)
      if (start.insert(n).second) todo.push_back(n);
  }
  return start;
}

std::set<Uri> eval(const Library& lib, const Index& index, const Query& q) {
  switch (q.kind) {
    case Query::Kind::Lookup:
      if (!known(lib, index, q.uri)) throw Error(ErrorKind::NotFound, "no such item: " + q.uri.str());
      return {q.uri};
    case Query::Kind::Related: {
      auto edges = index.edges({q.relation}, q.backward);
      std::set<Uri> out;
      for (const auto& u : eval(lib, index, *q.of.at(0)))
        if (auto it = edges.find(u); it != edges.end()) out.insert(it->second.begin(), it->second.end());
      return out;
    }
    case Query::Kind::Closure:
      return close(eval(lib, index, *q.of.at(0)), index.edges(q.relations, false), false);
    case Query::Kind::Union: {
      std::set<Uri> out;
      for (const auto& p : q.of) {
        auto s = eval(lib, index, *p);
        out.insert(s.begin(), s.end());
      }
      return out;
    }
  }
  return {};
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedQuery, what); }

Relation relationOf(const nlohmann::json& j) {
  if (!j.is_string()) malformed("relation must be a string");
  auto r = relationFromString(j.get<std::string>());
  if (!r) malformed("unknown relation " + j.get<std::string>());
  return *r;
}

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

Query Query::lookup(Uri u) {
  Query q;
  q.uri = std::move(u);
  return q;
}

Query Query::related(Query of, Relation r, bool backward) {
  Query q;
  q.kind = Kind::Related;
  q.of.push_back(std::make_shared<const Query>(std::move(of)));
  q.relation = r;
  q.backward = backward;
  return q;
}

Query Query::closure(Query of, std::set<Relation> rs) {
  Query q;
  q.kind = Kind::Closure;
  q.of.push_back(std::make_shared<const Query>(std::move(of)));
  q.relations = std::move(rs);
  return q;
}

Query Query::unite(Query a, Query b) {
  Query q;
  q.kind = Kind::Union;
  q.of.push_back(std::make_shared<const Query>(std::move(a)));
  q.of.push_back(std::make_shared<const Query>(std::move(b)));
  return q;
}

Query Query::fromJson(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1) malformed("a query is an object with exactly one key");
  const std::string key = j.begin().key();
  const nlohmann::json& body = j.begin().value();
  if (key == "lookup") {
    if (!body.is_string()) malformed("lookup takes a URI string");
    try {
      return lookup(Uri::parse(body.get<std::string>()));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::MalformedUri) malformed(e.message());
      throw;
    }
  }
  if (key == "related") {
    bool backward = false;
    if (body.is_object() && body.contains("direction")) {
      const auto& d = body.at("direction");
      if (d == "backward")
        backward = true;
      else if (d != "forward")
        malformed("direction must be \"forward\" or \"backward\"");
    }
    return related(fromJson(field(body, "of")), relationOf(field(body, "relation")), backward);
  }
  if (key == "closure") {
    const auto& rs = field(body, "relations");
    if (!rs.is_array()) malformed("relations must be an array");
    std::set<Relation> set;
    for (const auto& r : rs) set.insert(relationOf(r));
    return closure(fromJson(field(body, "of")), std::move(set));
  }
  if (key == "union") {
    if (!body.is_array() || body.empty()) malformed("union takes a non-empty array of queries");
    Query q;
    q.kind = Kind::Union;
    for (const auto& p : body) q.of.push_back(std::make_shared<const Query>(fromJson(p)));
    return q;
  }
  malformed("unknown query form \"" + key + "\"");
}

nlohmann::json Query::toJson() const {
  switch (kind) {
    case Kind::Lookup:
      return {{"lookup", uri.str()}};
    case Kind::Related:
      return {{"related",
               {{"of", of.at(0)->toJson()}, {"relation", to_string(relation)}, {"direction", backward ? "backward" : "forward"}}}};
    case Kind::Closure: {
      auto rs = nlohmann::json::array();
      for (auto r : relations) rs.push_back(to_string(r));
      return {{"closure", {{"of", of.at(0)->toJson()}, {"relations", rs}}}};
    }
    case Kind::Union: {
      auto qs = nlohmann::json::array();
      for (const auto& p : of) qs.push_back(p->toJson());
      return {{"union", qs}};
    }
  }
  return nullptr;
}

std::set<Uri> evaluate(const Library& lib, const Query& q) {
  Index index(lib);
  return eval(lib, index, q);
}

std::set<Uri> dependencyClosure(const Library& lib, const Uri& u) {
  Index index(lib);
  if (!known(lib, index, u)) throw Error(ErrorKind::NotFound, "no such item: " + u.str());
  return close({u}, index.edges({Relation::DependsOn, Relation::Includes, Relation::HasMeta}, false), true);
}

nlohmann::json toJson(const std::set<Uri>& uris) {
  std::vector<std::string> s;
  for (const auto& u : uris) s.push_back(u.str());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace mmtk::services
