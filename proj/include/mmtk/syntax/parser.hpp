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

#ifndef MMTK_SYNTAX_PARSER_HPP
#define MMTK_SYNTAX_PARSER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmtk/kernel/library.hpp"
#include "mmtk/syntax/scope.hpp"

// Concrete syntax (`.mmt` files):
//
//   document ::= "namespace" IRI (theory | view)*
//   theory   ::= "theory" NAME [":" URIREF] "=" "{" (include | constant)* "}"
//   include  ::= "include" URIREF
//   constant ::= NAME [":" term] ["=" term] ["#" fixity DELIM NAT] "."
//   view     ::= "view" NAME ":" URIREF "->" URIREF "=" "{" (NAME "=" term ".")* "}"
//   term     ::= binder | arrow
//   binder   ::= ("[" NAME [":" term] "]" | "{" NAME [":" term] "}") term
//   arrow    ::= appseq ["->" term]
//   appseq   ::= atom+
//   atom     ::= NAME | URIREF | "(" term ")"
//
// URIREF is `<absolute-uri>`, `?Module[?symbol]` relative to the document
// namespace, or (for module references) a bare module name. Infix, prefix and
// postfix operators come from the notations visible in scope.

namespace mmtk::syntax {

std::vector<Module> parseDocument(std::string_view source, const Library& lib,
                                  const std::optional<std::string>& expectedNamespace = std::nullopt,
                                  const std::string& file = "<input>");

/// Parses a term in the scope of `scope`; names in `ctx` are free variables.
Term parseTerm(std::string_view s, const Theory& scope, const Library& lib, const Context& ctx = {});
Term parseTerm(std::string_view s, const Scope& scope, const Context& ctx = {});

/// Module URIs declared by a document, found without resolving any names.
std::vector<Uri> scanModules(std::string_view source, const std::optional<std::string>& expectedNamespace = std::nullopt,
                             const std::string& file = "<input>");

}  // namespace mmtk::syntax

#endif  // MMTK_SYNTAX_PARSER_HPP
