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

#include "adgame/http_service.hpp"

#include <functional>
#include <string>

#include "httplib.h"
#include "json.hpp"

#include "adgame/corpus.hpp"
#include "adgame/errors.hpp"
#include "adgame/io.hpp"
#include "adgame/session.hpp"

namespace adgame {

using nlohmann::json;

namespace {

constexpr const char* kJson = "application/json";

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(2) + "\n", kJson);
}

void send_error(httplib::Response& res, int status, const std::string& message,
                const std::vector<std::string>& details = {}) {
  send(res, status,
       {{"error", {{"status", status}, {"message", message}, {"details", details}}}});
}

json body_of(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

// Maps the library's exceptions onto HTTP statuses.
Handler guarded(Handler inner) {
  return [inner = std::move(inner)](const httplib::Request& req, httplib::Response& res) {
    try {
      inner(req, res);
    } catch (const NotFound& e) {
      send_error(res, 404, e.what());
    } catch (const Conflict& e) {
      send_error(res, 409, e.what(), e.details());
    } catch (const ValidationError& e) {
      send_error(res, 422, e.what(), e.violations());
    } catch (const CapExceeded& e) {
      send_error(res, 422, e.what());
    } catch (const DomainError& e) {
      send_error(res, 422, e.what());
    } catch (const ParseError& e) {
      send_error(res, 400, e.what());
    } catch (const json::exception& e) {
      send_error(res, 400, e.what());
    } catch (const std::exception& e) {
      send_error(res, 500, e.what());
    }
  };
}

// {"mode": "exact"} | {"mode": "k-cohesive", "k": 4} | {"k": 4} | {}.
std::optional<SolveMode> mode_of(const json& body) {
  auto mode = body.find("mode");
  auto k = body.find("k");
  if (k != body.end() && !k->is_number_integer()) {
    throw ParseError("field 'k': expected an integer");
  }
  if (mode != body.end()) {
    if (!mode->is_string()) throw ParseError("field 'mode': expected a string");
    if (*mode == "exact") return SolveMode::exact();
    if (*mode != "k-cohesive") {
      throw ParseError("field 'mode': expected \"exact\" or \"k-cohesive\"");
    }
    if (k == body.end()) throw ParseError("field 'k': missing");
  }
  if (k != body.end()) return SolveMode::k_cohesive(k->get<int>());
  return std::nullopt;
}

std::optional<GameParams> params_of(const json& body) {
  auto it = body.find("params");
  if (it == body.end()) return std::nullopt;
  return params_from_json(*it);
}

std::vector<RequirementId> ids_of(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end()) return {};
  if (!it->is_array()) throw ParseError(std::string("field '") + key + "': expected an array");
  std::vector<RequirementId> out;
  for (const auto& v : *it) {
    if (!v.is_string()) throw ParseError(std::string("field '") + key + "': expected ids");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<SessionStore::ChildSpec> children_of(const json& body) {
  std::vector<SessionStore::ChildSpec> out;
  auto index = [](const json& v, const std::string& field) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw ParseError("field '" + field + "': expected a coalition index");
    }
    return v.get<std::size_t>();
  };
  if (auto it = body.find("coalitions"); it != body.end()) {
    if (!it->is_array()) throw ParseError("field 'coalitions': expected an array");
    for (const auto& v : *it) out.push_back({index(v, "coalitions"), {}});
  }
  if (auto it = body.find("children"); it != body.end()) {
    if (!it->is_array()) throw ParseError("field 'children': expected an array");
    for (const auto& c : *it) {
      if (!c.is_object() || !c.contains("coalition")) {
        throw ParseError("field 'children': expected {\"coalition\", \"edits\"} objects");
      }
      SessionStore::ChildSpec spec{index(c["coalition"], "children.coalition"), {}};
      if (c.contains("edits")) spec.edits = edits_from_json(c["edits"]);
      out.push_back(std::move(spec));
    }
  }
  return out;
}

}  // namespace

void register_routes(httplib::Server& server, SessionStore& store) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS"}});
  server.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (res.body.empty()) {
      send_error(res, res.status, res.status == 404 ? "no route for " + req.method + " " + req.path
                                                    : "request failed");
    }
  });

  server.Get("/v1/health", [](const httplib::Request&, httplib::Response& res) {
    send(res, 200, {{"status", "ok"}});
  });

  server.Get("/v1/corpus", [](const httplib::Request&, httplib::Response& res) {
    send(res, 200, {{"models", corpus_names()}});
  });

  server.Get(R"(/v1/corpus/([^/]+))", guarded([](const httplib::Request& req,
                                                 httplib::Response& res) {
    try {
      send(res, 200, model_to_json(corpus_model(req.matches[1])));
    } catch (const DomainError& e) {
      throw NotFound(e.what());
    }
  }));

  server.Post("/v1/sessions", guarded([&store](const httplib::Request& req,
                                               httplib::Response& res) {
    const json body = body_of(req);
    ModelDocument model;
    if (auto it = body.find("corpus"); it != body.end()) {
      if (!it->is_string()) throw ParseError("field 'corpus': expected a name");
      model = corpus_model(it->get<std::string>());
    } else if (auto m = body.find("model"); m != body.end()) {
      model = model_from_json(*m);
    } else {
      model = model_from_json(body);
    }
    const auto params = body.contains("corpus") || body.contains("model")
                            ? params_of(body)
                            : std::nullopt;
    const std::string id = store.create(model, params);
    send(res, 201, {{"session", id}, {"tree", tree_to_json(*store.snapshot(id))}});
  }));

  server.Get("/v1/sessions", guarded([&store](const httplib::Request&, httplib::Response& res) {
    send(res, 200, {{"sessions", store.list()}});
  }));

  server.Get(R"(/v1/sessions/([^/]+))", guarded([&store](const httplib::Request& req,
                                                          httplib::Response& res) {
    send(res, 200, tree_to_json(*store.snapshot(req.matches[1])));
  }));

  server.Get(R"(/v1/sessions/([^/]+)/audit)",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               send(res, 200, {{"violations", audit(*store.snapshot(req.matches[1]))}});
             }));

  server.Get(R"(/v1/sessions/([^/]+)/export)",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               send(res, 200, store.export_session(req.matches[1]));
             }));

  server.Get(R"(/v1/sessions/([^/]+)/jobs/([^/]+))",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               json status = store.job(req.matches[1], req.matches[2]);
               send(res, status["status"] == "running" ? 202 : 200, status);
             }));

  server.Get(R"(/v1/sessions/([^/]+)/nodes/([^/]+))",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               auto tree = store.snapshot(req.matches[1]);
               auto it = tree->nodes.find(req.matches[2]);
               if (it == tree->nodes.end()) {
                 throw NotFound("session " + tree->id + " has no node '" +
                                std::string(req.matches[2]) + "'");
               }
               send(res, 200, node_to_json(it->second));
             }));

  server.Put(R"(/v1/sessions/([^/]+)/nodes/([^/]+)/params)",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const json body = body_of(req);
               const json& params = body.contains("params") ? body["params"] : body;
               send(res, 200,
                    store.set_params(req.matches[1], req.matches[2], params_from_json(params)));
             }));

  server.Post(R"(/v1/sessions/([^/]+)/nodes/([^/]+)/decompose)",
              guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const std::string session = req.matches[1];
                auto outcome = store.decompose(session, req.matches[2], mode_of(body_of(req)));
                if (outcome.result) {
                  send(res, 200, *outcome.result);
                } else {
                  send(res, 202,
                       {{"status", "running"},
                        {"job", outcome.job},
                        {"poll", "/v1/sessions/" + session + "/jobs/" + outcome.job}});
                }
              }));

  server.Post(R"(/v1/sessions/([^/]+)/nodes/([^/]+)/children)",
              guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const json body = body_of(req);
                send(res, 201,
                     store.accept_children(req.matches[1], req.matches[2], children_of(body),
                                           ids_of(body, "remove")));
              }));

  server.Post(R"(/v1/sessions/([^/]+)/nodes/([^/]+)/terminate)",
              guarded([&store](const httplib::Request& req, httplib::Response& res) {
                send(res, 200, store.terminate(req.matches[1], req.matches[2]));
              }));

  server.Post(R"(/v1/sessions/([^/]+)/nodes/([^/]+)/what-if)",
              guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const json body = body_of(req);
                send(res, 200,
                     store.what_if(req.matches[1], req.matches[2], params_of(body),
                                   mode_of(body)));
              }));

  server.Get(R"(/v1/sessions/([^/]+)/nodes/([^/]+)/graph)",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const std::string format =
                   req.has_param("format") ? req.get_param_value("format") : "json";
               if (format == "dot") {
                 res.status = 200;
                 res.set_content(store.interaction_dot(req.matches[1], req.matches[2]),
                                 "text/vnd.graphviz");
               } else if (format == "json") {
                 send(res, 200, store.interaction_graph(req.matches[1], req.matches[2]));
               } else {
                 throw DomainError("format must be json or dot");
               }
             }));
}

}  // namespace adgame
