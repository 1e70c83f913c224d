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

#include "mmtk/checking/report.hpp"

#include <algorithm>

namespace mmtk::checking {

std::string Diagnostic::text() const { return std::string(to_string(kind)) + ": " + message; }

void CheckReport::error(const Uri& uri, ErrorKind kind, std::string message, std::optional<SourceRef> source) {
  errors.push_back(Diagnostic{uri, std::move(source), kind, std::move(message), Severity::Error, {}, {}});
}

void CheckReport::warning(const Uri& uri, ErrorKind kind, std::string message, std::optional<SourceRef> source) {
  warnings.push_back(Diagnostic{uri, std::move(source), kind, std::move(message), Severity::Warning, {}, {}});
}

void CheckReport::add(const Uri& uri, const Error& e, std::optional<SourceRef> fallback) {
  error(uri, e.kind(), e.message(), e.where() ? e.where() : fallback);
}

void CheckReport::merge(const CheckReport& other) {
  errors.insert(errors.end(), other.errors.begin(), other.errors.end());
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

bool CheckReport::mentions(const Uri& uri) const {
  return std::any_of(errors.begin(), errors.end(), [&](const Diagnostic& d) { return d.uri == uri; });
}

nlohmann::ordered_json toJson(const CheckReport& r) {
  auto out = nlohmann::ordered_json::array();
  for (const auto* list : {&r.errors, &r.warnings}) {
    for (const auto& d : *list) {
      nlohmann::ordered_json j;
      j["uri"] = d.uri.str();
      j["line"] = d.source ? nlohmann::ordered_json(d.source->line) : nlohmann::ordered_json(nullptr);
      j["message"] = d.text();
      j["severity"] = d.severity == Severity::Error ? "error" : "warning";
      out.push_back(std::move(j));
    }
  }
  return out;
}

}  // namespace mmtk::checking
