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

#ifndef MMTK_KERNEL_MODULE_HPP
#define MMTK_KERNEL_MODULE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mmtk/kernel/error.hpp"
#include "mmtk/kernel/term.hpp"
#include "mmtk/kernel/uri.hpp"

namespace mmtk {

enum class Fixity { Prefix, Infix, InfixLeft, InfixRight, Postfix };

std::string_view to_string(Fixity f);
std::optional<Fixity> fixityFromString(std::string_view s);

/// Fixity, delimiter and precedence for one symbol. Infix forms take two
/// arguments, prefix and postfix forms one.
struct Notation {
  Uri symbol;
  Fixity fixity = Fixity::Prefix;
  std::string delimiter;
  int precedence = 0;
  int arity = 1;

  /// Throws SyntaxError when the delimiter is empty or contains whitespace,
  /// or the precedence is outside [0, 100].
  void validate() const;
  bool isInfix() const {
    return fixity == Fixity::Infix || fixity == Fixity::InfixLeft || fixity == Fixity::InfixRight;
  }
  bool operator==(const Notation&) const = default;
};

struct Constant {
  std::string name;
  std::optional<Term> type;
  std::optional<Term> definiens;
  std::optional<Notation> notation;
  std::optional<SourceRef> source;

  bool operator==(const Constant&) const = default;
};

struct Include {
  Uri from;
  std::optional<SourceRef> source;

  bool operator==(const Include&) const = default;
};

using Declaration = std::variant<Constant, Include>;

struct Theory {
  Uri uri;
  std::optional<Uri> meta;
  std::vector<Declaration> declarations;
  std::optional<SourceRef> source;

  /// Own constant with the given name, or null.
  const Constant* findConstant(const std::string& name) const;
  std::vector<Uri> includes() const;
  bool operator==(const Theory&) const = default;
};

struct View {
  Uri uri;
  Uri from;
  Uri to;
  std::map<std::string, Term> assignments;
  std::optional<SourceRef> source;

  bool operator==(const View&) const = default;
};

using Module = std::variant<Theory, View>;

const Uri& moduleUri(const Module& m);

}  // namespace mmtk

#endif  // MMTK_KERNEL_MODULE_HPP
