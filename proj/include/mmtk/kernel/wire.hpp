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

#ifndef MMTK_KERNEL_WIRE_HPP
#define MMTK_KERNEL_WIRE_HPP

#include "json.hpp"
#include "mmtk/kernel/module.hpp"
#include "mmtk/kernel/term.hpp"

// JSON wire format for terms and modules. Terms:
//   {"OMS": "<uri>"} | {"OMV": "<name>"} | {"OMA": [head, arg...]}
//   | {"OMBIND": {"binder": t, "vars": [{"name": n, "type": t|null}], "body": t}}
// Modules: {"theory": {...}} or {"view": {...}}.

namespace mmtk::wire {

using Json = nlohmann::ordered_json;

Json toJson(const Term& t);
Term termFromJson(const Json& j);

Json toJson(const Notation& n);
Notation notationFromJson(const Json& j);

Json toJson(const Declaration& d);
Declaration declarationFromJson(const Json& j);

Json toJson(const Module& m);
Module moduleFromJson(const Json& j);

/// Canonical serialization: two-space indentation, trailing newline.
std::string dump(const Json& j);

}  // namespace mmtk::wire

#endif  // MMTK_KERNEL_WIRE_HPP
