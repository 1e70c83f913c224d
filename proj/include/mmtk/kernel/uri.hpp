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

#ifndef MMTK_KERNEL_URI_HPP
#define MMTK_KERNEL_URI_HPP

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace mmtk {

/// Logical identifier of a module or symbol: `namespace?module?symbol`.
///
/// The namespace is an absolute IRI without `?`. Module and symbol names are
/// nonempty and free of `?`, whitespace and brackets. A symbol part implies a
/// module part.
class Uri {
 public:
  Uri() = default;
  /// Validating constructor; throws MalformedUri.
  Uri(std::string ns, std::optional<std::string> module = std::nullopt,
      std::optional<std::string> symbol = std::nullopt);

  static Uri parse(std::string_view s);

  const std::string& ns() const { return ns_; }
  const std::optional<std::string>& module() const { return module_; }
  const std::optional<std::string>& symbol() const { return symbol_; }

  bool isModule() const { return module_.has_value() && !symbol_.has_value(); }
  bool isSymbol() const { return symbol_.has_value(); }

  /// Drops the symbol part. Requires a module part.
  Uri moduleUri() const;
  /// Appends a module or symbol part.
  Uri operator/(std::string_view name) const;

  std::string str() const;

  auto operator<=>(const Uri&) const = default;
  bool operator==(const Uri&) const = default;

 private:
  std::string ns_;
  std::optional<std::string> module_;
  std::optional<std::string> symbol_;
};

/// True iff `name` is a legal module or symbol name.
bool isValidName(std::string_view name);

inline Uri parseUri(std::string_view s) { return Uri::parse(s); }
inline std::string printUri(const Uri& u) { return u.str(); }

}  // namespace mmtk

template <>
struct std::hash<mmtk::Uri> {
  std::size_t operator()(const mmtk::Uri& u) const noexcept {
    return std::hash<std::string>{}(u.str());
  }
};

#endif  // MMTK_KERNEL_URI_HPP
