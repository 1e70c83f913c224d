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

#include "mmtk/checking/flatten.hpp"

#include <algorithm>
#include <map>

namespace mmtk::checking {

namespace {

void expand(const Library& lib, const Theory& t, std::vector<Uri>& stack, std::set<Uri>& done,
            std::vector<FlatConstant>& out) {
  for (const auto& inc : t.includes()) {
    if (std::find(stack.begin(), stack.end(), inc) != stack.end()) {
      std::string path;
      for (const auto& u : stack) path += u.str() + " -> ";
      throw Error(ErrorKind::IncludeCycle, "include cycle: " + path + inc.str());
    }
    if (done.count(inc)) continue;
    TheoryPtr child = lib.theory(inc);
    stack.push_back(inc);
    expand(lib, *child, stack, done, out);
    stack.pop_back();
    done.insert(inc);
  }
  for (const auto& d : t.declarations)
    if (const auto* c = std::get_if<Constant>(&d)) out.push_back(FlatConstant{t.uri, *c});
}

}  // namespace

std::vector<FlatConstant> flatten(const Library& lib, const Theory& t) {
  std::vector<Uri> stack{t.uri};
  std::set<Uri> done;
  std::vector<FlatConstant> out;
  expand(lib, t, stack, done, out);
  std::map<std::string, Uri> origins;
  for (const auto& fc : out) {
    auto [it, fresh] = origins.emplace(fc.constant.name, fc.origin);
    if (!fresh && it->second != fc.origin)
      throw Error(ErrorKind::NameClash, "constant " + fc.constant.name + " is declared in both " + it->second.str() +
                                            " and " + fc.origin.str());
  }
  return out;
}

std::vector<Uri> includeClosure(const Library& lib, const Theory& t) {
  std::vector<Uri> out{t.uri};
  std::set<Uri> seen{t.uri};
  for (std::size_t i = 0; i < out.size(); ++i) {
    TheoryPtr th = i == 0 ? nullptr : lib.theory(out[i]);
    for (const auto& inc : (i == 0 ? t : *th).includes())
      if (seen.insert(inc).second) out.push_back(inc);
  }
  return out;
}

std::vector<Uri> metaChain(const Library& lib, const Theory& t) {
  std::vector<Uri> out;
  std::optional<Uri> next = t.meta;
  while (next) {
    if (*next == t.uri || std::find(out.begin(), out.end(), *next) != out.end())
      throw Error(ErrorKind::MetaCycle, "meta-theory cycle through " + next->str());
    out.push_back(*next);
    next = lib.theory(*next)->meta;
  }
  return out;
}

std::set<Uri> visibleTheories(const Library& lib, const Theory& t) {
  std::set<Uri> out;
  for (const auto& u : includeClosure(lib, t)) out.insert(u);
  for (const auto& m : metaChain(lib, t))
    for (const auto& u : includeClosure(lib, *lib.theory(m))) out.insert(u);
  return out;
}

}  // namespace mmtk::checking
