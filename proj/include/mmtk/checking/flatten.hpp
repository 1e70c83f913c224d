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

#ifndef MMTK_CHECKING_FLATTEN_HPP
#define MMTK_CHECKING_FLATTEN_HPP

#include <set>
#include <vector>

#include "mmtk/kernel/library.hpp"

namespace mmtk::checking {

struct FlatConstant {
  Uri origin;
  Constant constant;
  Uri uri() const { return origin / constant.name; }
};

/// Constants of `t` with includes expanded depth-first. Every included theory
/// contributes once; `t`'s own constants come last. The meta-theory is not
/// inlined. Throws IncludeCycle, NameClash.
std::vector<FlatConstant> flatten(const Library& lib, const Theory& t);

/// `t`, followed by every theory it includes transitively.
std::vector<Uri> includeClosure(const Library& lib, const Theory& t);

/// t.meta, its meta, and so on. Throws MetaCycle.
std::vector<Uri> metaChain(const Library& lib, const Theory& t);

/// Modules whose constants may be referenced from `t`: its include closure
/// and the include closure of every theory on its meta chain.
std::set<Uri> visibleTheories(const Library& lib, const Theory& t);

}  // namespace mmtk::checking

#endif  // MMTK_CHECKING_FLATTEN_HPP
