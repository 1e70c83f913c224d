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

#ifndef MMTK_TESTS_CORPUS_HPP
#define MMTK_TESTS_CORPUS_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mmtk/kernel/library.hpp"
#include "mmtk/syntax/parser.hpp"

namespace mmtk::testing {

inline std::string archiveDir() { return MMTK_ARCHIVE_DIR; }

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Source documents in dependency order.
inline std::vector<std::string> corpusFiles() {
  const std::string src = archiveDir() + "/source/";
  return {src + "lf.mmt", src + "fol.mmt", src + "imp.mmt", src + "algebra.mmt"};
}

inline void loadCorpus(Library& lib) {
  for (const auto& f : corpusFiles())
    for (auto& m : syntax::parseDocument(readFile(f), lib, std::string("http://ex.org/"), f)) lib.add(std::move(m));
}

struct OwnedTerm {
  Uri owner;
  std::string component;
  Term term;
};

// Every type, definiens and view assignment in the loaded corpus.
inline std::vector<OwnedTerm> corpusTerms(const Library& lib) {
  std::vector<OwnedTerm> out;
  for (const auto& u : lib.loadedModules()) {
    ModulePtr m = lib.module(u);
    if (const auto* th = std::get_if<Theory>(m.get())) {
      for (const auto& d : th->declarations) {
        const auto* c = std::get_if<Constant>(&d);
        if (!c) continue;
        if (c->type) out.push_back({u / c->name, "type", *c->type});
        if (c->definiens) out.push_back({u / c->name, "definiens", *c->definiens});
      }
    } else {
      for (const auto& [k, t] : std::get<View>(*m).assignments) out.push_back({u / k, "definiens", t});
    }
  }
  return out;
}

}  // namespace mmtk::testing

#endif
