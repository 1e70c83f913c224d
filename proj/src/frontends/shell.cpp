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

#include "mmtk/frontends/shell.hpp"

#include <fstream>
#include <sstream>

#include "mmtk/syntax/render.hpp"

namespace mmtk::frontends {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::pair<std::string, std::string> split(const std::string& s) {
  auto sp = s.find_first_of(" \t");
  if (sp == std::string::npos) return {s, ""};
  return {s.substr(0, sp), trim(s.substr(sp + 1))};
}

std::string count(std::size_t n, const char* what) {
  return std::to_string(n) + " " + what + (n == 1 ? "" : "s");
}

void requireArgument(const std::string& verb, const std::string& arg, const char* what) {
  if (arg.empty()) throw Error(ErrorKind::SyntaxError, verb + " expects " + what);
}

}  // namespace

Shell::Shell(Session& session, std::ostream& out)
    : session_(session), out_(out), base_(std::filesystem::current_path()) {}

Shell::~Shell() = default;

std::filesystem::path Shell::resolvePath(const std::string& p) const {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base_ / path;
}

bool Shell::report(const std::string& what, const checking::CheckReport& r) {
  for (const auto& list : {&r.errors, &r.warnings})
    for (const auto& d : *list)
      out_ << "  " << (d.severity == checking::Severity::Error ? "error" : "warning") << " " << d.uri.str()
           << (d.source ? " (" + d.source->file + ":" + std::to_string(d.source->line) + ")" : std::string()) << ": "
           << d.text() << "\n";
  out_ << what << ": " << count(r.errors.size(), "error") << "\n";
  return r.ok();
}

bool Shell::execute(const std::string& raw) {
  const std::string line = trim(raw);
  if (line.empty() || line[0] == '#') return true;
  auto [verb, rest] = split(line);
  bool ok = false;
  try {
    ok = dispatch(verb, rest);
  } catch (const Error& e) {
    out_ << "error: " << to_string(e.kind()) << ": " << e.message() << "\n";
  } catch (const std::exception& e) {
    out_ << "error: Io: " << e.what() << "\n";
  }
  if (!ok) ++failures_;
  return ok;
}

bool Shell::dispatch(const std::string& verb, const std::string& rest) {
  if (verb == "exit") {
    exited_ = true;
    return true;
  }
  if (verb == "archive") {
    auto [sub, path] = split(rest);
    if (sub != "add") throw Error(ErrorKind::SyntaxError, "usage: archive add PATH");
    requireArgument("archive add", path, "a directory");
    services::Archive a = session_.addArchive(resolvePath(path));
    out_ << "archive " << a.id << ": " << a.ns << "\n";
    return true;
  }
  if (verb == "build") {
    requireArgument(verb, rest, "an archive id");
    return report("build " + rest, session_.build(rest));
  }
  if (verb == "check") {
    requireArgument(verb, rest, "a module URI or a file");
    std::filesystem::path p = resolvePath(rest);
    if (std::filesystem::is_regular_file(p)) {
      bool ok = true;
      for (const auto& [u, r] : session_.checkFile(p)) ok &= report("check " + u.str(), r);
      return ok;
    }
    Uri u = Uri::parse(rest);
    return report("check " + u.str(), session_.check(u));
  }
  if (verb == "style") {
    requireArgument(verb, rest, "a style name");
    if (!session_.styles().contains(rest)) throw Error(ErrorKind::NotFound, "no style named " + rest);
    style_ = rest;
    out_ << "style " << rest << "\n";
    return true;
  }
  if (verb == "foundation") {
    auto [sub, name] = split(rest);
    if (sub != "add") throw Error(ErrorKind::SyntaxError, "usage: foundation add NAME");
    requireArgument("foundation add", name, "a foundation name");
    session_.addFoundation(name);
    out_ << "foundation " << name << "\n";
    return true;
  }
  if (verb == "server") {
    auto [sub, arg] = split(rest);
    if (sub == "on") {
      int port = 0;
      try {
        std::size_t used = 0;
        port = std::stoi(arg, &used);
        if (used != arg.size() || port < 0 || port > 65535) throw std::invalid_argument(arg);
      } catch (const std::exception&) {
        throw Error(ErrorKind::SyntaxError, "server on expects a port number");
      }
      if (server_ && server_->running()) throw Error(ErrorKind::Io, "server is already running");
      server_ = std::make_unique<Server>(session_);
      int bound = server_->start(port);
      out_ << "server on " << bound << "\n";
      return true;
    }
    if (sub == "off") {
      if (!server_ || !server_->running()) throw Error(ErrorKind::Io, "server is not running");
      server_->stop();
      server_.reset();
      out_ << "server off\n";
      return true;
    }
    throw Error(ErrorKind::SyntaxError, "usage: server on PORT | server off");
  }
  if (verb == "script") {
    requireArgument(verb, rest, "a file");
    runScript(resolvePath(rest));
    return true;
  }
  if (verb == "render") {
    requireArgument(verb, rest, "a URI");
    std::string text = session_.content(Uri::parse(rest), Format::Text, style_).body;
    out_ << text;
    if (text.empty() || text.back() != '\n') out_ << "\n";
    return true;
  }
  if (verb == "query") {
    requireArgument(verb, rest, "a query in JSON");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(rest);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::MalformedQuery, std::string("query is not JSON: ") + e.what());
    }
    out_ << services::toJson(session_.query(services::Query::fromJson(j))).dump() << "\n";
    return true;
  }
  throw Error(ErrorKind::SyntaxError, "unknown command \"" + verb + "\"");
}

int Shell::run(std::istream& in) {
  const int before = failures_;
  std::string line;
  while (!exited_ && std::getline(in, line)) execute(line);
  return failures_ - before;
}

int Shell::runScript(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read script " + file.string());
  auto saved = base_;
  base_ = std::filesystem::absolute(file).parent_path();
  int failed = 0;
  try {
    failed = run(in);
  } catch (...) {
    base_ = saved;
    throw;
  }
  base_ = saved;
  return failed;
}

}  // namespace mmtk::frontends
