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

#ifndef MMTK_CHECKING_REPORT_HPP
#define MMTK_CHECKING_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mmtk/kernel/error.hpp"
#include "mmtk/kernel/term.hpp"
#include "mmtk/kernel/uri.hpp"

namespace mmtk::checking {

enum class Severity { Error, Warning };

struct Diagnostic {
  Uri uri;
  std::optional<SourceRef> source;
  ErrorKind kind = ErrorKind::TypeMismatch;
  std::string message;
  Severity severity = Severity::Error;
  /// "type" or "definiens" when the failure is inside a constant's term.
  std::string component;
  /// Set when the failure is located at a known subterm.
  std::optional<Position> position;

  /// "<Kind>: <message>"
  std::string text() const;
};

/// Result of checking a unit. Empty `errors` means the unit is accepted.
struct CheckReport {
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;

  bool ok() const { return errors.empty(); }
  void error(const Uri& uri, ErrorKind kind, std::string message, std::optional<SourceRef> source = std::nullopt);
  void warning(const Uri& uri, ErrorKind kind, std::string message, std::optional<SourceRef> source = std::nullopt);
  void add(const Uri& uri, const Error& e, std::optional<SourceRef> fallback = std::nullopt);
  void merge(const CheckReport& other);
  /// True if some error names `uri`.
  bool mentions(const Uri& uri) const;
};

/// `[{"uri", "line", "message", "severity"}]`, errors first.
nlohmann::ordered_json toJson(const CheckReport& r);

}  // namespace mmtk::checking

#endif  // MMTK_CHECKING_REPORT_HPP
