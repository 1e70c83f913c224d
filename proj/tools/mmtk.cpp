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

#include <algorithm>
#include <csignal>
#include <iostream>

#include <unistd.h>

#include "CLI11.hpp"
#include "mmtk/frontends/server.hpp"
#include "mmtk/frontends/shell.hpp"

using namespace mmtk;

int main(int argc, char** argv) {
  CLI::App app{"mmtk: theory graph shell and HTTP server"};
  std::string script, assets, host = "127.0.0.1";
  int port = -1;
  app.add_option("--script", script, "Run the commands in FILE")->check(CLI::ExistingFile);
  app.add_option("--server", port, "Serve HTTP on PORT (0 picks a free port)")->check(CLI::Range(0, 65535));
  app.add_option("--host", host, "Address to listen on")->capture_default_str();
  app.add_option("--assets", assets, "Directory served at /")->check(CLI::ExistingDirectory);
  CLI11_PARSE(app, argc, argv);

  // signals are taken synchronously by the main thread in server mode
  sigset_t stop;
  sigemptyset(&stop);
  sigaddset(&stop, SIGINT);
  sigaddset(&stop, SIGTERM);
  if (port >= 0) pthread_sigmask(SIG_BLOCK, &stop, nullptr);

  frontends::Session session;
  frontends::Shell shell(session, std::cout);
  int failed = 0;
  try {
    if (!script.empty()) failed = shell.runScript(script);
  } catch (const Error& e) {
    std::cout << "error: " << to_string(e.kind()) << ": " << e.message() << "\n";
    return 1;
  }

  if (port >= 0) {
    frontends::Server server(session, assets.empty() ? std::nullopt : std::optional<std::filesystem::path>(assets));
    try {
      std::cout << "serving on " << host << ":" << server.start(port, host) << std::endl;
    } catch (const Error& e) {
      std::cout << "error: " << to_string(e.kind()) << ": " << e.message() << "\n";
      return 1;
    }
    int sig = 0;
    sigwait(&stop, &sig);
    server.stop();
  } else if (script.empty()) {
    const bool interactive = isatty(STDIN_FILENO);
    std::string line;
    while (!shell.exited()) {
      if (interactive) std::cout << "mmtk> " << std::flush;
      if (!std::getline(std::cin, line)) break;
      shell.execute(line);
    }
    failed = shell.failures();
  }
  std::cout.flush();
  return std::min(failed, 255);
}
