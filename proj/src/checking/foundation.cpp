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

#include "mmtk/checking/foundation.hpp"

#include <mutex>

#include "mmtk/checking/flatten.hpp"

namespace mmtk::checking {

void FoundationRegistry::add(FoundationPtr f) {
  std::unique_lock lock(mutex_);
  for (const auto& g : foundations_)
    if (g->name() == f->name()) throw Error(ErrorKind::DuplicateDeclaration, "foundation " + f->name() + " already added");
  foundations_.push_back(std::move(f));
}

bool FoundationRegistry::contains(const std::string& name) const {
  std::shared_lock lock(mutex_);
  for (const auto& g : foundations_)
    if (g->name() == name) return true;
  return false;
}

FoundationPtr FoundationRegistry::dispatch(const Library& lib, const Theory& t) const {
  std::vector<Uri> chain{t.uri};
  for (const auto& m : metaChain(lib, t)) chain.push_back(m);
  std::shared_lock lock(mutex_);
  for (const auto& m : chain)
    for (const auto& f : foundations_)
      if (f->applicableTo(m)) return f;
  return nullptr;
}

}  // namespace mmtk::checking
