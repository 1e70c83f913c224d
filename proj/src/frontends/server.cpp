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

#include "mmtk/frontends/server.hpp"

#include <thread>

#include "httplib.h"

namespace mmtk::frontends {

namespace {

const char* kIndex =
    "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>mmtk</title></head>\n"
    "<body><p>mmtk server. Routes: <code>/content</code>, <code>/query</code>, <code>/infer</code>.</p></body></html>\n";

void fail(httplib::Response& res, const std::string& uri, const Error& e, int status) {
  res.status = status;
  res.set_content(errorBody(uri, e), "application/json");
}

std::string param(const httplib::Request& req, const char* name, const std::string& fallback) {
  return req.has_param(name) ? req.get_param_value(name) : fallback;
}

std::string required(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) throw Error(ErrorKind::MalformedQuery, std::string("missing parameter ") + name);
  return req.get_param_value(name);
}

// Runs a handler body, turning errors into CheckReport responses.
template <typename F>
void guarded(httplib::Response& res, const std::string& uri, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    fail(res, uri, e, httpStatus(e.kind()));
  } catch (const std::exception& e) {
    fail(res, uri, Error(ErrorKind::Io, e.what()), 500);
  }
}

}  // namespace

int httpStatus(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFound: return 404;
    case ErrorKind::MalformedUri:
    case ErrorKind::InvalidPosition:
    case ErrorKind::MalformedQuery:
    case ErrorKind::SyntaxError: return 400;
    case ErrorKind::Io: return 500;
    default: return 422;
  }
}

std::string errorBody(const std::string& uri, const Error& e) {
  nlohmann::ordered_json d;
  d["uri"] = uri;
  d["line"] = e.where() ? nlohmann::ordered_json(e.where()->line) : nlohmann::ordered_json(nullptr);
  d["message"] = std::string(to_string(e.kind())) + ": " + e.message();
  d["severity"] = "error";
  return nlohmann::ordered_json::array({d}).dump();
}

struct Server::Impl {
  Session& session;
  httplib::Server http;
  std::thread thread;
  int port = -1;

  Impl(Session& s, const std::optional<std::filesystem::path>& assets) : session(s) {
    http.Get("/content", [this](const httplib::Request& req, httplib::Response& res) {
      const std::string uri = param(req, "uri", "");
      guarded(res, uri, [&] {
        Uri u = Uri::parse(required(req, "uri"));
        Format f = formatFromString(param(req, "format", "json"));
        Content c = session.content(u, f, param(req, "style", "default"));
        res.set_content(c.body, c.contentType);
      });
    });
    http.Post("/query", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, "", [&] {
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(req.body);
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorKind::MalformedQuery, std::string("query body is not JSON: ") + e.what());
        }
        res.set_content(services::toJson(session.query(services::Query::fromJson(j))).dump(), "application/json");
      });
    });
    http.Get("/infer", [this](const httplib::Request& req, httplib::Response& res) {
      const std::string owner = param(req, "owner", "");
      guarded(res, owner, [&] {
        Uri u = Uri::parse(required(req, "owner"));
        InferResult r = session.infer(u, param(req, "component", "type"), parsePosition(param(req, "position", "")),
                                      param(req, "style", "default"));
        if (!r.type) {
          res.status = 422;
          res.set_content(checking::toJson(r.report).dump(), "application/json");
          return;
        }
        res.set_content(r.toJson().dump(), "application/json");
      });
    });
    if (assets && std::filesystem::is_directory(*assets)) {
      http.set_mount_point("/", assets->string());
    } else {
      http.Get("/", [](const httplib::Request&, httplib::Response& res) { res.set_content(kIndex, "text/html; charset=utf-8"); });
    }
  }
};

Server::Server(Session& session, std::optional<std::filesystem::path> assets)
    : impl_(std::make_unique<Impl>(session, assets)) {}

Server::~Server() { stop(); }

int Server::start(int port, const std::string& host) {
  if (running()) throw Error(ErrorKind::Io, "server is already listening on port " + std::to_string(impl_->port));
  int bound = port == 0 ? impl_->http.bind_to_any_port(host) : (impl_->http.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw Error(ErrorKind::Io, "cannot listen on " + host + ":" + std::to_string(port));
  impl_->port = bound;
  impl_->thread = std::thread([this] { impl_->http.listen_after_bind(); });
  impl_->http.wait_until_ready();
  return bound;
}

void Server::stop() {
  if (!impl_->thread.joinable()) return;
  impl_->http.stop();
  impl_->thread.join();
  impl_->port = -1;
}

bool Server::running() const { return impl_->thread.joinable(); }

int Server::port() const { return impl_->port; }

}  // namespace mmtk::frontends
