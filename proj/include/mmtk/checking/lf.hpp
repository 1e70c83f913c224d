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

#ifndef MMTK_CHECKING_LF_HPP
#define MMTK_CHECKING_LF_HPP

#include <cstddef>

#include "mmtk/checking/foundation.hpp"

namespace mmtk::checking {

/// URI of the bundled LF theory.
inline const char* const kLFTheory = "http://ex.org/lf?LF";

/// The LF type theory: `type`, `kind` (not declarable), dependent functions
/// `{x:A} B` with `A -> B` as sugar, and `[x:A] t`. Equality is alpha
/// equivalence of beta-delta normal forms after eta contraction.
class LFFoundation : public Foundation {
 public:
  explicit LFFoundation(Uri lf = Uri::parse(kLFTheory), std::size_t budget = 10000);

  std::string name() const override { return "lf"; }
  bool applicableTo(const Uri& meta) const override { return meta == lf_; }
  Term infer(const Library& lib, const Theory& theory, const Context& ctx, const Term& t) const override;
  bool check(const Library& lib, const Theory& theory, const Context& ctx, const Term& t,
             const Term& type) const override;
  bool equal(const Library& lib, const Theory& theory, const Context& ctx, const Term& a,
             const Term& b) const override;
  bool isUniverse(const Library& lib, const Theory& theory, const Context& ctx, const Term& sort) const override;
  bool isPrimitive(const Uri& u) const override;

  /// Full normal form used by `equal`: beta, delta, arrows as Pi, curried
  /// binders, eta contracted. Throws BudgetExceeded.
  Term normalize(const Library& lib, const Term& t) const;
  /// Beta normal form; no definitions are unfolded.
  Term betaNormal(const Term& t) const;

  Uri type() const { return lf_ / "type"; }
  Uri kind() const { return lf_ / "kind"; }
  Uri lambda() const { return lf_ / "lambda"; }
  Uri pi() const { return lf_ / "Pi"; }
  Uri arrow() const { return lf_ / "arrow"; }
  std::size_t budget() const { return budget_; }

 private:
  Uri lf_;
  std::size_t budget_;
};

}  // namespace mmtk::checking

#endif  // MMTK_CHECKING_LF_HPP
