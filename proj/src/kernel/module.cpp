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

#include "mmtk/kernel/module.hpp"

#include <cctype>

namespace mmtk {

std::string_view to_string(Fixity f) {
  switch (f) {
    case Fixity::Prefix: return "prefix";
    case Fixity::Infix: return "infix";
    case Fixity::InfixLeft: return "infixl";
    case Fixity::InfixRight: return "infixr";
    case Fixity::Postfix: return "postfix";
  }
  return "prefix";
}

std::optional<Fixity> fixityFromString(std::string_view s) {
  if (s == "prefix") return Fixity::Prefix;
  if (s == "infix") return Fixity::Infix;
  if (s == "infixl") return Fixity::InfixLeft;
  if (s == "infixr") return Fixity::InfixRight;
  if (s == "postfix") return Fixity::Postfix;
  return std::nullopt;
}

void Notation::validate() const {
  if (delimiter.empty()) throw Error(ErrorKind::SyntaxError, "empty notation delimiter");
  for (char c : delimiter)
    if (std::isspace(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::SyntaxError, "notation delimiter contains whitespace");
  if (precedence < 0 || precedence > 100)
    throw Error(ErrorKind::SyntaxError, "precedence " + std::to_string(precedence) + " outside [0, 100]");
  if (isInfix() && arity != 2) throw Error(ErrorKind::SyntaxError, "infix notation must have arity 2");
  if (arity < 1) throw Error(ErrorKind::SyntaxError, "notation arity must be positive");
}

const Constant* Theory::findConstant(const std::string& name) const {
  for (const auto& d : declarations)
    if (const auto* c = std::get_if<Constant>(&d); c && c->name == name) return c;
  return nullptr;
}

std::vector<Uri> Theory::includes() const {
  std::vector<Uri> out;
  for (const auto& d : declarations)
    if (const auto* i = std::get_if<Include>(&d)) out.push_back(i->from);
  return out;
}

const Uri& moduleUri(const Module& m) {
  return std::visit([](const auto& x) -> const Uri& { return x.uri; }, m);
}

}  // namespace mmtk
