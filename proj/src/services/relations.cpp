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

#include "mmtk/services/relations.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace mmtk::services {

namespace {

void dependsOn(std::set<RelationalTriple>& out, const Uri& subject, const Term& t) {
  for (const auto& s : symbolsOf(t)) out.insert({subject, Relation::DependsOn, s});
}

std::string encode(const std::string& s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (c == '%' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

std::string decode(const std::string& s, std::size_t line) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '%') {
      out += s[i];
      continue;
    }
    if (i + 2 >= s.size() || !std::isxdigit(static_cast<unsigned char>(s[i + 1])) ||
        !std::isxdigit(static_cast<unsigned char>(s[i + 2])))
      throw Error(ErrorKind::SyntaxError, "bad percent escape in index line " + std::to_string(line));
    out += static_cast<char>(std::stoi(s.substr(i + 1, 2), nullptr, 16));
    i += 2;
  }
  return out;
}

}  // namespace

std::set<RelationalTriple> extractRelations(const Module& m) {
  std::set<RelationalTriple> out;
  if (const auto* t = std::get_if<Theory>(&m)) {
    if (t->meta) out.insert({t->uri, Relation::HasMeta, *t->meta});
    for (const auto& d : t->declarations) {
      if (const auto* inc = std::get_if<Include>(&d)) {
        out.insert({t->uri, Relation::Includes, inc->from});
        continue;
      }
      const auto& c = std::get<Constant>(d);
      const Uri cu = t->uri / c.name;
      out.insert({t->uri, Relation::Declares, cu});
      if (c.type) dependsOn(out, cu, *c.type);
      if (c.definiens) dependsOn(out, cu, *c.definiens);
    }
    return out;
  }
  const auto& v = std::get<View>(m);
  out.insert({v.uri, Relation::HasDomain, v.from});
  out.insert({v.uri, Relation::HasCodomain, v.to});
  for (const auto& [name, term] : v.assignments) {
    out.insert({v.uri, Relation::Declares, v.uri / name});
    dependsOn(out, v.uri / name, term);
  }
  return out;
}

std::string formatIndex(const std::set<RelationalTriple>& triples) {
  std::vector<std::string> lines;
  for (const auto& t : triples)
    lines.push_back(encode(t.subject.str()) + " " + std::string(to_string(t.relation)) + " " + encode(t.object.str()));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::set<RelationalTriple> parseIndex(const std::string& text) {
  std::set<RelationalTriple> out;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string s, r, o, extra;
    if (!(fields >> s >> r >> o) || (fields >> extra))
      throw Error(ErrorKind::SyntaxError, "index line " + std::to_string(n) + " is not `subject RELATION object`");
    auto rel = relationFromString(r);
    if (!rel) throw Error(ErrorKind::SyntaxError, "unknown relation " + r + " in index line " + std::to_string(n));
    try {
      out.insert({Uri::parse(decode(s, n)), *rel, Uri::parse(decode(o, n))});
    } catch (const Error& e) {
      throw Error(ErrorKind::SyntaxError, "index line " + std::to_string(n) + ": " + e.message());
    }
  }
  return out;
}

}  // namespace mmtk::services
