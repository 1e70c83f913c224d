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

#ifndef MMTK_CHECKING_CHECKER_HPP
#define MMTK_CHECKING_CHECKER_HPP

#include "mmtk/checking/flatten.hpp"
#include "mmtk/checking/foundation.hpp"
#include "mmtk/checking/report.hpp"

namespace mmtk::checking {

/// Structural pass, then the dispatched foundation for every own constant.
/// All failures are collected.
CheckReport checkTheory(const Library& lib, const FoundationRegistry& foundations, const Theory& t);

/// Homomorphic translation along `v`; the identity on the meta-theory.
/// Throws MissingAssignment.
Term applyMorphism(const Library& lib, const View& v, const Term& t);

CheckReport checkView(const Library& lib, const FoundationRegistry& foundations, const View& v);

CheckReport checkModule(const Library& lib, const FoundationRegistry& foundations, const Module& m);

}  // namespace mmtk::checking

#endif  // MMTK_CHECKING_CHECKER_HPP
