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

#include "mmtk/kernel/error.hpp"

namespace mmtk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedUri: return "MalformedUri";
    case ErrorKind::InvalidPosition: return "InvalidPosition";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnresolvedName: return "UnresolvedName";
    case ErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorKind::NonAssociativeChain: return "NonAssociativeChain";
    case ErrorKind::IncludeCycle: return "IncludeCycle";
    case ErrorKind::MetaCycle: return "MetaCycle";
    case ErrorKind::NameClash: return "NameClash";
    case ErrorKind::NoFoundation: return "NoFoundation";
    case ErrorKind::NotFunctionType: return "NotFunctionType";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::UntypedConstant: return "UntypedConstant";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::KindError: return "KindError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MissingAssignment: return "MissingAssignment";
    case ErrorKind::MissingManifest: return "MissingManifest";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::MalformedQuery: return "MalformedQuery";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

std::string SourceRef::toString() const {
  return file + ":" + std::to_string(line) + ":" + std::to_string(column) + "-" +
         std::to_string(endLine) + ":" + std::to_string(endColumn);
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<SourceRef> where)
    : std::runtime_error(std::string(mmtk::to_string(kind)) + ": " + message),
      kind_(kind),
      message_(message),
      where_(std::move(where)) {}

}  // namespace mmtk
