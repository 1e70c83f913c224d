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

#include "mmtk/kernel/uri.hpp"

#include <cctype>
#include <vector>

#include "mmtk/kernel/error.hpp"

namespace mmtk {

namespace {

bool isAbsoluteIri(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = s[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
      return false;
  }
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '?') return false;
  }
  return colon + 1 < s.size();
}

}  // namespace

bool isValidName(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    switch (c) {
      case '?': case '(': case ')': case '[': case ']': case '{': case '}':
        return false;
      default:
        if (std::isspace(static_cast<unsigned char>(c))) return false;
    }
  }
  return true;
}

Uri::Uri(std::string ns, std::optional<std::string> module, std::optional<std::string> symbol)
    : ns_(std::move(ns)), module_(std::move(module)), symbol_(std::move(symbol)) {
  if (!isAbsoluteIri(ns_)) throw Error(ErrorKind::MalformedUri, "namespace is not an absolute IRI: '" + ns_ + "'");
  if (module_ && !isValidName(*module_)) throw Error(ErrorKind::MalformedUri, "invalid module name '" + *module_ + "'");
  if (symbol_ && !module_) throw Error(ErrorKind::MalformedUri, "symbol part without module part");
  if (symbol_ && !isValidName(*symbol_)) throw Error(ErrorKind::MalformedUri, "invalid symbol name '" + *symbol_ + "'");
}

Uri Uri::parse(std::string_view s) {
  if (s.empty()) throw Error(ErrorKind::MalformedUri, "empty URI");
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto q = s.find('?', start);
    if (q == std::string_view::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, q - start));
    start = q + 1;
  }
  if (parts.size() > 3) throw Error(ErrorKind::MalformedUri, "more than two '?' in '" + std::string(s) + "'");
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].empty()) throw Error(ErrorKind::MalformedUri, "empty segment in '" + std::string(s) + "'");
  }
  std::optional<std::string> module, symbol;
  if (parts.size() >= 2) module = std::string(parts[1]);
  if (parts.size() == 3) symbol = std::string(parts[2]);
  return Uri(std::string(parts[0]), std::move(module), std::move(symbol));
}

Uri Uri::moduleUri() const {
  if (!module_) throw Error(ErrorKind::MalformedUri, "URI has no module part: " + str());
  return Uri(ns_, module_);
}

Uri Uri::operator/(std::string_view name) const {
  if (!module_) return Uri(ns_, std::string(name));
  if (!symbol_) return Uri(ns_, module_, std::string(name));
  throw Error(ErrorKind::MalformedUri, "cannot extend symbol URI " + str());
}

std::string Uri::str() const {
  std::string out = ns_;
  if (module_) out += "?" + *module_;
  if (symbol_) out += "?" + *symbol_;
  return out;
}

}  // namespace mmtk
