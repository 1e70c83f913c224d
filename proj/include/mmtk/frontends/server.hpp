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

#ifndef MMTK_FRONTENDS_SERVER_HPP
#define MMTK_FRONTENDS_SERVER_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "mmtk/frontends/session.hpp"

namespace mmtk::frontends {

/// HTTP interface:
///   GET  /content?uri=&format=json|text|html&style=
///   POST /query            (query JSON in the body)
///   GET  /infer?owner=&component=type|definiens&position=0/1&style=
///   GET  /                 (static assets)
/// Errors carry a CheckReport JSON body: 400 bad parameters, 404 unknown
/// items, 422 failed inference.
class Server {
 public:
  explicit Server(Session& session, std::optional<std::filesystem::path> assets = std::nullopt);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Listens in a background thread; port 0 picks a free port. Returns the
  /// bound port. Throws Io.
  int start(int port, const std::string& host = "127.0.0.1");
  void stop();
  bool running() const;
  int port() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Status for an error raised while serving a request.
int httpStatus(ErrorKind kind);

/// The CheckReport JSON of a single error.
std::string errorBody(const std::string& uri, const Error& e);

}  // namespace mmtk::frontends

#endif  // MMTK_FRONTENDS_SERVER_HPP
