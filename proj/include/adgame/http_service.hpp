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

// JSON-over-HTTP front end of SessionStore.
//
//   GET  /v1/health
//   GET  /v1/corpus                               bundled model names
//   GET  /v1/corpus/{name}                        model document
//   POST /v1/sessions                             model | {"corpus"|"model", "params"}
//   GET  /v1/sessions                             session ids
//   GET  /v1/sessions/{s}                         tree
//   GET  /v1/sessions/{s}/audit                   tree invariant violations
//   GET  /v1/sessions/{s}/export                  architecture (409 if unfinished)
//   GET  /v1/sessions/{s}/jobs/{j}                background decomposition
//   GET  /v1/sessions/{s}/nodes/{n}               node
//   PUT  /v1/sessions/{s}/nodes/{n}/params        params
//   POST /v1/sessions/{s}/nodes/{n}/decompose     {"mode", "k"} (202 + job when slow)
//   POST /v1/sessions/{s}/nodes/{n}/children      {"coalitions"|"children", "remove"}
//   POST /v1/sessions/{s}/nodes/{n}/terminate
//   POST /v1/sessions/{s}/nodes/{n}/what-if       {"params", "mode", "k"}
//   GET  /v1/sessions/{s}/nodes/{n}/graph         adjacency; ?format=dot for DOT
//
// Errors are {"error": {"status", "message", "details"}} with 400 (malformed
// payload), 404 (unknown session, node or job), 409 (state conflict) or 422
// (invalid model, parameters or request).

#ifndef ADGAME_HTTP_SERVICE_HPP
#define ADGAME_HTTP_SERVICE_HPP

namespace httplib {
class Server;
}

namespace adgame {

class SessionStore;

/// Registers the /v1/ routes. `store` must outlive `server`.
void register_routes(httplib::Server& server, SessionStore& store);

}  // namespace adgame

#endif  // ADGAME_HTTP_SERVICE_HPP
