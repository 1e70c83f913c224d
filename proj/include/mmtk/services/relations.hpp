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

#ifndef MMTK_SERVICES_RELATIONS_HPP
#define MMTK_SERVICES_RELATIONS_HPP

#include <set>
#include <string>

#include "mmtk/kernel/library.hpp"

namespace mmtk::services {

/// Declares, Includes, HasMeta, HasDomain, HasCodomain and DependsOn triples
/// of one module. View assignments count as declarations of the view.
std::set<RelationalTriple> extractRelations(const Module& m);

/// One `subject RELATION object` line per triple, lines sorted, whitespace
/// and `%` in URIs percent-encoded.
std::string formatIndex(const std::set<RelationalTriple>& triples);
/// Inverse of formatIndex. Throws SyntaxError.
std::set<RelationalTriple> parseIndex(const std::string& text);

}  // namespace mmtk::services

#endif  // MMTK_SERVICES_RELATIONS_HPP
