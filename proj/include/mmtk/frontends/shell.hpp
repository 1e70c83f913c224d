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

#ifndef MMTK_FRONTENDS_SHELL_HPP
#define MMTK_FRONTENDS_SHELL_HPP

#include <filesystem>
#include <istream>
#include <memory>
#include <ostream>
#include <string>

#include "mmtk/frontends/server.hpp"
#include "mmtk/frontends/session.hpp"

namespace mmtk::frontends {

/// Line-oriented command interpreter:
///   archive add PATH | build ID | check URI|PATH | style NAME
///   foundation add NAME | server on PORT | server off | script PATH
///   render URI | query JSON | exit
/// Blank lines and lines starting with `#` are skipped. Failures print
/// `error: <Kind>: <message>` and do not stop the run.
class Shell {
 public:
  Shell(Session& session, std::ostream& out);
  ~Shell();

  /// Runs one line. Returns false if the command failed.
  bool execute(const std::string& line);
  /// Runs lines until the end of input or `exit`. Returns the number of
  /// failed commands.
  int run(std::istream& in);
  int runScript(const std::filesystem::path& file);

  bool exited() const { return exited_; }
  int failures() const { return failures_; }
  const std::string& style() const { return style_; }
  Server* server() { return server_.get(); }

 private:
  bool dispatch(const std::string& verb, const std::string& rest);
  std::filesystem::path resolvePath(const std::string& p) const;
  bool report(const std::string& what, const checking::CheckReport& r);

  Session& session_;
  std::ostream& out_;
  std::string style_ = "default";
  std::filesystem::path base_;
  std::unique_ptr<Server> server_;
  bool exited_ = false;
  int failures_ = 0;
};

}  // namespace mmtk::frontends

#endif  // MMTK_FRONTENDS_SHELL_HPP
