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

#ifndef MMTK_KERNEL_ERROR_HPP
#define MMTK_KERNEL_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mmtk {

enum class ErrorKind {
  MalformedUri,
  InvalidPosition,
  NotFound,
  SyntaxError,
  UnresolvedName,
  DuplicateDeclaration,
  NonAssociativeChain,
  IncludeCycle,
  MetaCycle,
  NameClash,
  NoFoundation,
  NotFunctionType,
  TypeMismatch,
  UntypedConstant,
  UnboundVariable,
  KindError,
  BudgetExceeded,
  MissingAssignment,
  MissingManifest,
  DuplicateId,
  MalformedQuery,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Location of a declaration or token in a source file. Lines and columns
/// are 1-based.
struct SourceRef {
  std::string file;
  std::size_t line = 0;
  std::size_t column = 0;
  std::size_t endLine = 0;
  std::size_t endColumn = 0;

  std::string toString() const;
  bool operator==(const SourceRef&) const = default;
};

/// The single exception type thrown by the library. `kind()` classifies the
/// failure; `what()` is "<Kind>: <message>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<SourceRef> where = std::nullopt);

  ErrorKind kind() const { return kind_; }
  const std::string& message() const { return message_; }
  const std::optional<SourceRef>& where() const { return where_; }

 private:
  ErrorKind kind_;
  std::string message_;
  std::optional<SourceRef> where_;
};

}  // namespace mmtk

#endif  // MMTK_KERNEL_ERROR_HPP
