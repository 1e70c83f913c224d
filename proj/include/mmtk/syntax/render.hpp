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

#ifndef MMTK_SYNTAX_RENDER_HPP
#define MMTK_SYNTAX_RENDER_HPP

#include <optional>
#include <string>

#include "mmtk/kernel/library.hpp"
#include "mmtk/syntax/style.hpp"

namespace mmtk::syntax {

struct RenderOptions {
  /// Constant, theory or view whose scope decides short names and
  /// notations. Without an owner every symbol is printed as `<uri>`.
  std::optional<Uri> owner;
  /// Emitted as `data-mmt-component` in HTML output.
  std::string component;
  /// Free variables of the term.
  Context context;
  /// Overrides the style's target.
  std::optional<Target> target;
};

/// Text output reparses to an alpha-equivalent term with parseTerm in the
/// owner's scope. HTML output wraps every subterm in a span carrying
/// `data-mmt-owner`, `data-mmt-component` and `data-mmt-position`.
///
/// Applications without a usable notation are printed by juxtaposition.
std::string renderTerm(const Term& t, const Style& style, const Library& lib, const RenderOptions& opts = {});

std::string renderDeclaration(const Declaration& d, const Uri& theory, const Style& style, const Library& lib,
                              std::optional<Target> target = std::nullopt);
std::string renderTheory(const Theory& t, const Style& style, const Library& lib,
                         std::optional<Target> target = std::nullopt);
std::string renderView(const View& v, const Style& style, const Library& lib,
                       std::optional<Target> target = std::nullopt);
std::string renderModule(const Module& m, const Style& style, const Library& lib,
                         std::optional<Target> target = std::nullopt);

std::string escapeHtml(std::string_view s);

}  // namespace mmtk::syntax

#endif  // MMTK_SYNTAX_RENDER_HPP
