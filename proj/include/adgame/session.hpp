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

// Recursive design sessions.
//
// A session is a tree of primitives. The root is the input model. Decomposing
// a node stores a payoff-ordered report on it; accepting coalitions of that
// report creates one child per coalition, restricted to the coalition's
// requirements plus optional edits. A node is finished when terminated. The
// architecture can be exported once the terminated leaves cover every root
// requirement that was not explicitly removed.
//
// SessionStore keeps each tree as an immutable snapshot. Mutations are
// serialized per session, build a new tree, audit it and swap it in, so
// readers always see a consistent state. With a storage directory, every
// committed tree is written to <dir>/<session>.json via a temporary file and
// a rename.

#ifndef ADGAME_SESSION_HPP
#define ADGAME_SESSION_HPP

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "adgame/model.hpp"
#include "adgame/solver.hpp"

namespace adgame {

/// Additions applied to a child primitive.
struct Edits {
  std::vector<Requirement> requirements;
  std::vector<Constraint> constraints;
  std::vector<IdPair> depends;
  std::vector<IdPair> derives;

  bool empty() const noexcept {
    return requirements.empty() && constraints.empty() && depends.empty() &&
           derives.empty();
  }
};

/// Accepts the model-format keys functional, scenarios, constraints,
/// depends and derives. Throws ParseError.
Edits edits_from_json(const nlohmann::json& doc);
nlohmann::json edits_to_json(const Edits& edits);

struct Restriction {
  AttributePrimitive primitive;
  // Relation pairs dropped because one endpoint falls outside the set.
  std::vector<std::string> warnings;
};

/// The sub-primitive on `members` (kept in parent order) plus `edits`.
/// Relations and raw relevance keep the pairs with both endpoints inside,
/// constraints are intersected with the new requirement set (empty ones
/// dropped), the tradeoff matrix is inherited. Throws DomainError when
/// `members` is empty or not a subset of the parent, ValidationError when
/// the edited result is invalid.
Restriction restrict_primitive(const AttributePrimitive& parent,
                               const std::vector<RequirementId>& members,
                               const Edits& edits = {});

enum class NodeStatus { kOpen, kDecomposed, kTerminated };

std::string to_string(NodeStatus status);

struct SessionNode {
  std::string id;
  std::optional<std::string> parent;
  // Rank of the coalition in the parent's report this node was built from.
  std::optional<std::size_t> source_coalition;
  AttributePrimitive primitive;
  GameParams params;
  // Payoff-ordered; coalition i is the i-th entry of the report payload.
  std::optional<SolveReport> last_report;
  NodeStatus status = NodeStatus::kOpen;
  std::vector<std::string> children;
  std::vector<std::string> warnings;
};

struct SessionTree {
  std::string id;
  std::string root;
  std::map<std::string, SessionNode> nodes;
  // Root requirements the architect removed from the design.
  std::vector<RequirementId> removed;
  std::size_t next_node = 0;
};

/// Structural invariants of a session tree; empty when sound.
std::vector<std::string> audit(const SessionTree& tree);

struct Coverage {
  std::vector<RequirementId> uncovered;   // root requirements not covered
  std::vector<std::string> open_leaves;   // leaves that are not terminated
  bool complete() const noexcept { return uncovered.empty() && open_leaves.empty(); }
};

Coverage coverage(const SessionTree& tree);

nlohmann::json node_to_json(const SessionNode& node);
nlohmann::json tree_to_json(const SessionTree& tree);
/// Throws ParseError or ValidationError.
SessionTree tree_from_json(const nlohmann::json& doc);

/// The final architecture as a nested document. Throws Conflict listing the
/// coverage gaps when the tree is not finished.
nlohmann::json export_architecture(const SessionTree& tree);

struct StoreOptions {
  std::optional<std::filesystem::path> directory;
  SolverOptions solver;
  // Decompositions running longer than this continue as a background job.
  std::chrono::milliseconds decompose_budget{10000};
};

/// Either a finished result or the id of a job still running.
struct DecomposeOutcome {
  std::optional<nlohmann::json> result;
  std::string job;
};

/// Thread-safe collection of sessions. Throws NotFound (unknown session,
/// node or job), Conflict (state does not allow the mutation), DomainError,
/// ValidationError or CapExceeded (invalid request), ParseError (malformed
/// payload).
class SessionStore {
 public:
  explicit SessionStore(StoreOptions options = {});
  ~SessionStore();
  SessionStore(const SessionStore&) = delete;
  SessionStore& operator=(const SessionStore&) = delete;

  /// Returns the new session id. `params` overrides the model's parameters.
  std::string create(const ModelDocument& model,
                     const std::optional<GameParams>& params = std::nullopt);
  std::vector<std::string> list() const;
  std::shared_ptr<const SessionTree> snapshot(const std::string& session) const;

  nlohmann::json set_params(const std::string& session, const std::string& node,
                            const GameParams& params);
  /// Solves with `mode` (default: k-cohesive at the node's k), stores the
  /// report and marks the node decomposed. Result payload:
  /// {"node", "report", "verification"}.
  DecomposeOutcome decompose(const std::string& session, const std::string& node,
                             const std::optional<SolveMode>& mode);
  /// {"status": "running"} or {"status": "done", "result": ...}; rethrows
  /// the job's error when it failed.
  nlohmann::json job(const std::string& session, const std::string& job) const;

  struct ChildSpec {
    std::size_t coalition = 0;
    Edits edits;
  };
  /// Creates one open child per spec. `removed` names requirements of the
  /// node to drop from the design. Returns {"children": [...], "warnings": {...}}.
  nlohmann::json accept_children(const std::string& session, const std::string& node,
                                 const std::vector<ChildSpec>& children,
                                 const std::vector<RequirementId>& removed = {});
  nlohmann::json terminate(const std::string& session, const std::string& node);

  /// Solves without touching the session. `params` and `mode` default to the
  /// node's own.
  nlohmann::json what_if(const std::string& session, const std::string& node,
                         const std::optional<GameParams>& params,
                         const std::optional<SolveMode>& mode) const;

  nlohmann::json export_session(const std::string& session) const;

  /// {"nodes", "edges"} payload, or DOT text, of the node's interaction graph;
  /// clustered by the node's last report when there is one.
  nlohmann::json interaction_graph(const std::string& session, const std::string& node) const;
  std::string interaction_dot(const std::string& session, const std::string& node) const;

  const StoreOptions& options() const noexcept { return options_; }
  /// Files in the storage directory that could not be loaded, with reasons.
  const std::vector<std::string>& load_errors() const noexcept { return load_errors_; }

 private:
  struct Session;
  struct Job;

  std::shared_ptr<Session> find(const std::string& session) const;
  void persist(const SessionTree& tree) const;
  nlohmann::json solve_payload(const AttributePrimitive& primitive,
                               const GameParams& params, const SolveMode& mode,
                               SolveReport* report_out) const;

  StoreOptions options_;
  std::vector<std::string> load_errors_;
  mutable std::mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  mutable std::mutex jobs_mu_;
  std::map<std::string, std::shared_ptr<Job>> jobs_;
};

}  // namespace adgame

#endif  // ADGAME_SESSION_HPP
