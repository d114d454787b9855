// Copyright 2026 The adgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// adgame-server: serves the /v1/ session API.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "httplib.h"

#include "adgame/http_service.hpp"
#include "adgame/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Decomposition game session server"};
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::string> data_dir;
  long long budget_ms = 10000;
  adgame::StoreOptions options;

  app.add_option("--host", host, "Listen address")->capture_default_str();
  app.add_option("--port", port, "Listen port")->capture_default_str();
  app.add_option("--data-dir", data_dir, "Persist sessions in this directory");
  app.add_option("--cap", options.solver.exact_cap,
                 "Largest requirement set an exhaustive search may examine")
      ->capture_default_str();
  app.add_option("--budget-ms", budget_ms,
                 "Decompositions slower than this continue as background jobs")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  if (data_dir) options.directory = *data_dir;
  options.decompose_budget = std::chrono::milliseconds(budget_ms);
  adgame::SessionStore store(options);
  for (const auto& e : store.load_errors()) std::cerr << "skipped session file " << e << "\n";

  httplib::Server server;
  adgame::register_routes(server, store);
  std::cerr << "listening on http://" << host << ":" << port << "/v1/\n";
  if (!server.listen(host, port)) {
    std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}
