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

#ifndef MMTK_TESTS_RANDOM_TERMS_HPP
#define MMTK_TESTS_RANDOM_TERMS_HPP

#include <random>
#include <string>
#include <vector>

#include "mmtk/kernel/term.hpp"

namespace mmtk::testing {

// Untyped-ish random terms over a tiny alphabet with heavy name reuse so that
// shadowing and capture situations are frequent.
class RandomTerms {
 public:
  explicit RandomTerms(unsigned seed) : rng_(seed) {}

  Term term(int depth) {
    int choice = pick(depth <= 0 ? 2 : 5);
    switch (choice) {
      case 0: return Term::sym(symbols_[pick(symbols_.size())]);
      case 1: return Term::var(names_[pick(names_.size())]);
      case 2:
      case 3: {
        std::vector<Term> args;
        int n = 1 + pick(2);
        for (int i = 0; i < n; ++i) args.push_back(term(depth - 1));
        return Term::app(term(depth - 1), std::move(args));
      }
      default: {
        std::vector<VarDecl> vars;
        int n = 1 + pick(2);
        std::vector<std::string> used;
        for (int i = 0; i < n; ++i) {
          std::string name = names_[pick(names_.size())];
          if (std::find(used.begin(), used.end(), name) != used.end()) continue;
          used.push_back(name);
          VarDecl d{name, std::nullopt, std::nullopt};
          if (pick(3) != 0) d.type = term(depth - 2);
          vars.push_back(std::move(d));
        }
        return Term::bind(Term::sym(symbols_[0]), std::move(vars), term(depth - 1));
      }
    }
  }

  Substitution substitution(int depth) {
    Substitution s;
    int n = 1 + pick(2);
    for (int i = 0; i < n; ++i) s.insert_or_assign(names_[pick(names_.size())], term(depth));
    return s;
  }

  int pick(std::size_t n) { return std::uniform_int_distribution<int>(0, static_cast<int>(n) - 1)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  std::vector<std::string> names_{"x", "y", "z", "x1"};
  std::vector<Uri> symbols_{Uri::parse("http://t.org?T?lam"), Uri::parse("http://t.org?T?f"),
                            Uri::parse("http://t.org?T?c")};
};

}  // namespace mmtk::testing

#endif
