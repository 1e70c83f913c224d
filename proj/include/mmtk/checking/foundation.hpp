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

#ifndef MMTK_CHECKING_FOUNDATION_HPP
#define MMTK_CHECKING_FOUNDATION_HPP

#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "mmtk/kernel/library.hpp"

namespace mmtk::checking {

/// Typing relation for the theories below some meta-theory. All operations
/// are deterministic and do not modify the library; failures are thrown as
/// Error.
class Foundation {
 public:
  virtual ~Foundation() = default;

  virtual std::string name() const = 0;
  virtual bool applicableTo(const Uri& meta) const = 0;
  virtual Term infer(const Library& lib, const Theory& theory, const Context& ctx, const Term& t) const = 0;
  virtual bool check(const Library& lib, const Theory& theory, const Context& ctx, const Term& t,
                     const Term& type) const = 0;
  virtual bool equal(const Library& lib, const Theory& theory, const Context& ctx, const Term& a,
                     const Term& b) const = 0;
  /// Whether `sort` may classify the type of a constant.
  virtual bool isUniverse(const Library& lib, const Theory& theory, const Context& ctx, const Term& sort) const = 0;
  /// Symbols typed by the foundation itself rather than by a declaration.
  virtual bool isPrimitive(const Uri&) const { return false; }
};

using FoundationPtr = std::shared_ptr<const Foundation>;

class FoundationRegistry {
 public:
  void add(FoundationPtr f);
  bool contains(const std::string& name) const;
  /// The first registered foundation applicable to `t` itself or to a theory
  /// on its meta chain, tried innermost first. Null if there is none.
  FoundationPtr dispatch(const Library& lib, const Theory& t) const;

 private:
  mutable std::shared_mutex mutex_;
  std::vector<FoundationPtr> foundations_;
};

}  // namespace mmtk::checking

#endif  // MMTK_CHECKING_FOUNDATION_HPP
