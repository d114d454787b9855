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

#include "adgame/session.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "adgame/errors.hpp"
#include "adgame/io.hpp"
#include "adgame/utility.hpp"

namespace adgame {

using nlohmann::json;

namespace {

std::set<RequirementId> id_set(const AttributePrimitive& p) {
  std::set<RequirementId> out;
  for (const auto& r : p.requirements) out.insert(r.id);
  return out;
}

std::vector<RequirementId> id_list(const AttributePrimitive& p) {
  std::vector<RequirementId> out;
  for (const auto& r : p.requirements) out.push_back(r.id);
  return out;
}

std::string pair_text(const IdPair& pair) {
  return "(" + pair.first + ", " + pair.second + ")";
}

void keep_pairs(const std::vector<IdPair>& from, const std::set<RequirementId>& inside,
                const char* relation, std::vector<IdPair>& to,
                std::vector<std::string>& warnings) {
  for (const auto& pair : from) {
    const bool a = inside.count(pair.first) > 0;
    const bool b = inside.count(pair.second) > 0;
    if (a && b) {
      to.push_back(pair);
    } else if (a || b) {
      warnings.push_back(std::string(relation) + " pair " + pair_text(pair) +
                         " dropped: " + (a ? pair.second : pair.first) +
                         " is outside the new primitive");
    }
  }
}

std::string random_id() {
  static std::mutex mu;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(mu);
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << rng();
  return out.str();
}

const SessionNode& node_of(const SessionTree& tree, const std::string& node) {
  auto it = tree.nodes.find(node);
  if (it == tree.nodes.end()) {
    throw NotFound("session " + tree.id + " has no node '" + node + "'");
  }
  return it->second;
}

SessionNode& node_of(SessionTree& tree, const std::string& node) {
  return const_cast<SessionNode&>(node_of(static_cast<const SessionTree&>(tree), node));
}

void require_not_terminated(const SessionNode& node) {
  if (node.status == NodeStatus::kTerminated) {
    throw Conflict("node " + node.id + " is terminated");
  }
}

// Decomposition and parameters are frozen once children exist.
void require_leaf_work(const SessionNode& node) {
  require_not_terminated(node);
  if (!node.children.empty()) {
    throw Conflict("node " + node.id + " already has accepted children");
  }
}

NodeStatus status_from(const std::string& s) {
  if (s == "open") return NodeStatus::kOpen;
  if (s == "decomposed") return NodeStatus::kDecomposed;
  if (s == "terminated") return NodeStatus::kTerminated;
  throw ParseError("field 'status': unknown node status '" + s + "'");
}

json architecture_node(const SessionTree& tree, const SessionNode& node) {
  json out = {{"node", node.id},
              {"name", node.primitive.name},
              {"status", to_string(node.status)},
              {"requirements", id_list(node.primitive)},
              {"params", params_to_json(node.params)}};
  if (node.parent && node.source_coalition) {
    const auto& parent = node_of(tree, *node.parent);
    out["coalition"] = *node.source_coalition;
    out["utility"] = report_number(parent.last_report->utilities[*node.source_coalition]);
  }
  json children = json::array();
  for (const auto& c : node.children) children.push_back(architecture_node(tree, node_of(tree, c)));
  out["children"] = std::move(children);
  return out;
}

void collect_leaves(const SessionTree& tree, const SessionNode& node, json& out) {
  if (node.children.empty()) {
    out.push_back({{"node", node.id},
                   {"requirements", id_list(node.primitive)}});
    return;
  }
  for (const auto& c : node.children) collect_leaves(tree, node_of(tree, c), out);
}

}  // namespace

// --- Edits and restriction --------------------------------------------------

Edits edits_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("field 'edits': expected an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    static const std::set<std::string> allowed = {"functional", "scenarios", "constraints",
                                                  "depends", "derives"};
    if (!allowed.count(it.key())) {
      throw ParseError("field 'edits." + it.key() + "': unknown field");
    }
  }
  ModelDocument parsed = model_from_json(doc, /*check=*/false);
  Edits out;
  out.requirements = std::move(parsed.primitive.requirements);
  out.constraints = std::move(parsed.primitive.constraints);
  out.depends = std::move(parsed.primitive.depends);
  out.derives = std::move(parsed.primitive.derives);
  return out;
}

json edits_to_json(const Edits& edits) {
  ModelDocument doc;
  doc.primitive.requirements = edits.requirements;
  doc.primitive.constraints = edits.constraints;
  doc.primitive.depends = edits.depends;
  doc.primitive.derives = edits.derives;
  json full = model_to_json(doc);
  json out = json::object();
  for (const char* key : {"functional", "scenarios", "constraints", "depends", "derives"}) {
    if (!full[key].empty()) out[key] = full[key];
  }
  return out;
}

Restriction restrict_primitive(const AttributePrimitive& parent,
                               const std::vector<RequirementId>& members,
                               const Edits& edits) {
  if (members.empty()) throw DomainError("cannot restrict to an empty requirement set");
  const auto parent_ids = id_set(parent);
  std::set<RequirementId> keep;
  for (const auto& id : members) {
    if (!parent_ids.count(id)) {
      throw DomainError("requirement '" + id + "' is not in the parent primitive");
    }
    keep.insert(id);
  }

  Restriction out;
  auto& child = out.primitive;
  child.name = parent.name;
  for (const auto& r : parent.requirements) {
    if (keep.count(r.id)) child.requirements.push_back(r);
  }
  std::set<RequirementId> inside = keep;
  for (const auto& r : edits.requirements) {
    child.requirements.push_back(r);
    inside.insert(r.id);
  }

  for (const auto& c : parent.constraints) {
    Constraint shrunk{c.id, {}};
    for (const auto& m : c.members) {
      if (inside.count(m)) shrunk.members.push_back(m);
    }
    if (!shrunk.members.empty()) child.constraints.push_back(std::move(shrunk));
  }
  child.constraints.insert(child.constraints.end(), edits.constraints.begin(),
                           edits.constraints.end());

  keep_pairs(parent.depends, inside, "depends", child.depends, out.warnings);
  keep_pairs(parent.derives, inside, "derives", child.derives, out.warnings);
  child.depends.insert(child.depends.end(), edits.depends.begin(), edits.depends.end());
  child.derives.insert(child.derives.end(), edits.derives.begin(), edits.derives.end());

  for (const auto& e : parent.raw_relevance) {
    if (inside.count(e.a) && inside.count(e.b)) child.raw_relevance.push_back(e);
  }
  child.tradeoff = parent.tradeoff;

  if (auto violations = validate(child); !violations.empty()) {
    throw ValidationError(std::move(violations));
  }
  return out;
}

// --- Tree -------------------------------------------------------------------

std::string to_string(NodeStatus status) {
  switch (status) {
    case NodeStatus::kOpen:
      return "open";
    case NodeStatus::kDecomposed:
      return "decomposed";
    case NodeStatus::kTerminated:
      return "terminated";
  }
  return "open";
}

std::vector<std::string> audit(const SessionTree& tree) {
  std::vector<std::string> out;
  auto root_it = tree.nodes.find(tree.root);
  if (root_it == tree.nodes.end()) {
    out.push_back("root node '" + tree.root + "' is missing");
    return out;
  }
  if (root_it->second.parent) out.push_back("root node has a parent");

  for (const auto& [key, node] : tree.nodes) {
    const std::string at = "node " + key + ": ";
    if (node.id != key) out.push_back(at + "stored under a different id");
    const auto primitive_problems = validate(node.primitive);
    if (!primitive_problems.empty()) {
      out.push_back(at + "invalid primitive: " + primitive_problems.front());
      continue;
    }
    PrimitiveView view(node.primitive);
    if (auto v = validate_params(node.params); !v.empty()) {
      out.push_back(at + "invalid params: " + v.front());
    }
    if (node.status == NodeStatus::kDecomposed && !node.last_report) {
      out.push_back(at + "decomposed without a report");
    }
    if (!node.children.empty() && !node.last_report) {
      out.push_back(at + "has children but no report");
    }
    if (!node.children.empty() && node.status == NodeStatus::kOpen) {
      out.push_back(at + "has children but is still open");
    }
    if (node.last_report) {
      for (const auto& v : check_decomposition(view, node.last_report->decomposition)) {
        out.push_back(at + "report: " + v);
      }
    }
    std::set<std::string> seen_children;
    std::set<std::size_t> seen_coalitions;
    for (const auto& c : node.children) {
      if (!seen_children.insert(c).second) out.push_back(at + "child " + c + " listed twice");
      auto child_it = tree.nodes.find(c);
      if (child_it == tree.nodes.end()) {
        out.push_back(at + "child " + c + " is missing");
        continue;
      }
      const auto& child = child_it->second;
      if (child.parent != key) out.push_back(at + "child " + c + " names another parent");
      if (!child.source_coalition || !node.last_report ||
          *child.source_coalition >= node.last_report->decomposition.size()) {
        out.push_back(at + "child " + c + " has no valid source coalition");
        continue;
      }
      if (!seen_coalitions.insert(*child.source_coalition).second) {
        out.push_back(at + "coalition " + std::to_string(*child.source_coalition) +
                      " accepted twice");
      }
      const auto coalition_ids =
          view.ids(node.last_report->decomposition[*child.source_coalition]);
      const auto child_ids = id_set(child.primitive);
      const auto parent_ids = id_set(node.primitive);
      for (const auto& id : coalition_ids) {
        if (!child_ids.count(id)) {
          out.push_back(at + "child " + c + " lacks coalition member " + id);
        }
      }
      for (const auto& id : child_ids) {
        const bool in_coalition =
            std::find(coalition_ids.begin(), coalition_ids.end(), id) != coalition_ids.end();
        if (!in_coalition && parent_ids.count(id)) {
          out.push_back(at + "child " + c + " takes " + id + " from outside its coalition");
        }
      }
    }
    if (node.parent) {
      auto parent_it = tree.nodes.find(*node.parent);
      if (parent_it == tree.nodes.end()) {
        out.push_back(at + "parent " + *node.parent + " is missing");
      } else {
        const auto& siblings = parent_it->second.children;
        if (std::find(siblings.begin(), siblings.end(), key) == siblings.end()) {
          out.push_back(at + "not listed by its parent");
        }
      }
    }
  }

  // Every node reachable from the root exactly once.
  std::set<std::string> visited;
  std::vector<std::string> stack = {tree.root};
  while (!stack.empty()) {
    std::string id = stack.back();
    stack.pop_back();
    if (!visited.insert(id).second) {
      out.push_back("node " + id + " is reachable twice");
      continue;
    }
    auto it = tree.nodes.find(id);
    if (it == tree.nodes.end()) continue;
    for (const auto& c : it->second.children) stack.push_back(c);
  }
  if (visited.size() != tree.nodes.size()) {
    out.push_back(std::to_string(tree.nodes.size() - std::min(visited.size(), tree.nodes.size())) +
                  " node(s) unreachable from the root");
  }

  const auto root_ids = id_set(root_it->second.primitive);
  for (const auto& id : tree.removed) {
    if (!root_ids.count(id)) out.push_back("removed requirement " + id + " is not in the root");
  }
  return out;
}

Coverage coverage(const SessionTree& tree) {
  Coverage out;
  std::set<RequirementId> covered;
  std::vector<std::string> stack = {tree.root};
  while (!stack.empty()) {
    const auto& node = node_of(tree, stack.back());
    stack.pop_back();
    if (!node.children.empty()) {
      for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
        stack.push_back(*it);
      }
    } else if (node.status == NodeStatus::kTerminated) {
      for (const auto& r : node.primitive.requirements) covered.insert(r.id);
    } else {
      out.open_leaves.push_back(node.id);
    }
  }
  const std::set<RequirementId> removed(tree.removed.begin(), tree.removed.end());
  for (const auto& r : node_of(tree, tree.root).primitive.requirements) {
    if (!covered.count(r.id) && !removed.count(r.id)) out.uncovered.push_back(r.id);
  }
  return out;
}

json node_to_json(const SessionNode& node) {
  json out = json::object();
  out["id"] = node.id;
  out["parent"] = node.parent ? json(*node.parent) : json(nullptr);
  out["source_coalition"] =
      node.source_coalition ? json(*node.source_coalition) : json(nullptr);
  out["status"] = to_string(node.status);
  out["params"] = params_to_json(node.params);
  out["model"] = model_to_json({node.primitive, node.params});
  if (node.last_report) {
    GameContext ctx(node.primitive, node.params);
    out["report"] = report_to_json(ctx, *node.last_report);
  } else {
    out["report"] = nullptr;
  }
  out["children"] = node.children;
  out["warnings"] = node.warnings;
  return out;
}

json tree_to_json(const SessionTree& tree) {
  json nodes = json::object();
  for (const auto& [id, node] : tree.nodes) nodes[id] = node_to_json(node);
  return {{"session", tree.id},
          {"root", tree.root},
          {"next_node", tree.next_node},
          {"removed", tree.removed},
          {"nodes", std::move(nodes)}};
}

SessionTree tree_from_json(const json& doc) {
  try {
    SessionTree tree;
    tree.id = doc.at("session").get<std::string>();
    tree.root = doc.at("root").get<std::string>();
    tree.next_node = doc.at("next_node").get<std::size_t>();
    tree.removed = doc.at("removed").get<std::vector<RequirementId>>();
    for (const auto& [id, n] : doc.at("nodes").items()) {
      SessionNode node;
      node.id = n.at("id").get<std::string>();
      if (!n.at("parent").is_null()) node.parent = n.at("parent").get<std::string>();
      if (!n.at("source_coalition").is_null()) {
        node.source_coalition = n.at("source_coalition").get<std::size_t>();
      }
      node.status = status_from(n.at("status").get<std::string>());
      ModelDocument model = model_from_json(n.at("model"));
      node.primitive = std::move(model.primitive);
      node.params = params_from_json(n.at("params"));
      if (!n.at("report").is_null()) {
        GameContext ctx(node.primitive, node.params);
        node.last_report = report_from_json(ctx, n.at("report"));
      }
      node.children = n.at("children").get<std::vector<std::string>>();
      node.warnings = n.at("warnings").get<std::vector<std::string>>();
      tree.nodes.emplace(id, std::move(node));
    }
    return tree;
  } catch (const json::exception& e) {
    throw ParseError(std::string("session document: ") + e.what());
  }
}

json export_architecture(const SessionTree& tree) {
  const Coverage cov = coverage(tree);
  if (!cov.complete()) {
    std::vector<std::string> details;
    for (const auto& id : cov.uncovered) details.push_back("uncovered requirement " + id);
    for (const auto& id : cov.open_leaves) details.push_back("node " + id + " is not terminated");
    throw Conflict("the architecture is not finished", std::move(details));
  }
  const auto& root = node_of(tree, tree.root);
  json elements = json::array();
  collect_leaves(tree, root, elements);
  return {{"session", tree.id},
          {"model", root.primitive.name},
          {"removed", tree.removed},
          {"design_elements", std::move(elements)},
          {"tree", architecture_node(tree, root)}};
}

// --- Store ------------------------------------------------------------------

struct SessionStore::Session {
  explicit Session(SessionTree initial)
      : tree(std::make_shared<const SessionTree>(std::move(initial))) {}

  std::shared_ptr<const SessionTree> get() const {
    std::lock_guard lock(read_mu);
    return tree;
  }

  // Applies `change` to a copy of the tree; commits only a tree that passes
  // the audit.
  template <typename Change>
  json mutate(const SessionStore& store, Change&& change) {
    std::lock_guard writer(write_mu);
    SessionTree next = *get();
    json result = change(next);
    if (auto problems = audit(next); !problems.empty()) {
      throw std::logic_error("session audit failed: " + problems.front());
    }
    store.persist(next);
    auto committed = std::make_shared<const SessionTree>(std::move(next));
    std::lock_guard lock(read_mu);
    tree = std::move(committed);
    return result;
  }

  mutable std::mutex read_mu;
  std::mutex write_mu;
  std::shared_ptr<const SessionTree> tree;
};

struct SessionStore::Job {
  std::string session;
  std::shared_future<json> result;
  std::thread worker;
};

SessionStore::SessionStore(StoreOptions options) : options_(std::move(options)) {
  if (!options_.directory) return;
  std::filesystem::create_directories(*options_.directory);
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(*options_.directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    try {
      SessionTree tree = tree_from_json(json::parse(read_text_file(path)));
      if (auto problems = audit(tree); !problems.empty()) {
        load_errors_.push_back(path.string() + ": " + problems.front());
        continue;
      }
      std::string id = tree.id;
      sessions_.emplace(id, std::make_shared<Session>(std::move(tree)));
    } catch (const std::exception& e) {
      load_errors_.push_back(path.string() + ": " + e.what());
    }
  }
}

SessionStore::~SessionStore() {
  std::lock_guard lock(jobs_mu_);
  for (auto& [id, job] : jobs_) {
    if (job->worker.joinable()) job->worker.join();
  }
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& session) const {
  std::lock_guard lock(sessions_mu_);
  auto it = sessions_.find(session);
  if (it == sessions_.end()) throw NotFound("unknown session '" + session + "'");
  return it->second;
}

void SessionStore::persist(const SessionTree& tree) const {
  if (!options_.directory) return;
  const auto target = *options_.directory / (tree.id + ".json");
  auto temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << tree_to_json(tree).dump(2) << "\n";
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

std::string SessionStore::create(const ModelDocument& model,
                                 const std::optional<GameParams>& params) {
  GameParams chosen = params ? *params : model.params.value_or(GameParams{});
  if (auto v = validate_params(chosen); !v.empty()) throw ValidationError(std::move(v));
  PrimitiveView check(model.primitive);

  SessionTree tree;
  tree.id = random_id();
  tree.root = "n0";
  tree.next_node = 1;
  SessionNode root;
  root.id = "n0";
  root.primitive = model.primitive;
  root.params = chosen;
  tree.nodes.emplace(root.id, std::move(root));
  if (auto problems = audit(tree); !problems.empty()) {
    throw std::logic_error("session audit failed: " + problems.front());
  }
  persist(tree);
  std::string id = tree.id;
  std::lock_guard lock(sessions_mu_);
  sessions_.emplace(id, std::make_shared<Session>(std::move(tree)));
  return id;
}

std::vector<std::string> SessionStore::list() const {
  std::lock_guard lock(sessions_mu_);
  std::vector<std::string> out;
  for (const auto& [id, s] : sessions_) out.push_back(id);
  return out;
}

std::shared_ptr<const SessionTree> SessionStore::snapshot(const std::string& session) const {
  return find(session)->get();
}

json SessionStore::set_params(const std::string& session, const std::string& node,
                              const GameParams& params) {
  if (auto v = validate_params(params); !v.empty()) throw ValidationError(std::move(v));
  return find(session)->mutate(*this, [&](SessionTree& tree) {
    auto& n = node_of(tree, node);
    require_leaf_work(n);
    n.params = params;
    n.last_report.reset();
    n.status = NodeStatus::kOpen;
    return node_to_json(n);
  });
}

json SessionStore::solve_payload(const AttributePrimitive& primitive,
                                 const GameParams& params, const SolveMode& mode,
                                 SolveReport* report_out) const {
  GameContext ctx(primitive, params);
  SolveReport report = payoff_ordered(solve(ctx, mode, options_.solver));
  auto verification = verify_solution(ctx, report.decomposition, mode, options_.solver);
  json out = {{"report", report_to_json(ctx, report)},
              {"verification", verification_to_json(ctx, verification)}};
  if (report_out) *report_out = std::move(report);
  return out;
}

DecomposeOutcome SessionStore::decompose(const std::string& session, const std::string& node,
                                         const std::optional<SolveMode>& mode) {
  auto s = find(session);
  auto tree = s->get();
  const auto& n = node_of(*tree, node);
  require_leaf_work(n);
  const SolveMode chosen = mode ? *mode : SolveMode::k_cohesive(n.params.k);
  if (chosen.is_exact() && n.primitive.requirements.size() > options_.solver.exact_cap) {
    throw CapExceeded(n.primitive.requirements.size(), options_.solver.exact_cap);
  }

  std::packaged_task<json()> task(
      [this, s, node, chosen, primitive = n.primitive, params = n.params]() {
        SolveReport report;
        json payload = solve_payload(primitive, params, chosen, &report);
        s->mutate(*this, [&](SessionTree& t) {
          auto& target = node_of(t, node);
          require_leaf_work(target);
          if (target.params != params) {
            throw Conflict("parameters of node " + node + " changed during the decomposition");
          }
          target.last_report = report;
          target.status = NodeStatus::kDecomposed;
          return json();
        });
        payload["node"] = node;
        return payload;
      });
  auto job = std::make_shared<Job>();
  job->session = session;
  job->result = task.get_future().share();
  job->worker = std::thread(std::move(task));

  DecomposeOutcome out;
  if (job->result.wait_for(options_.decompose_budget) == std::future_status::ready) {
    job->worker.join();
    out.result = job->result.get();
    return out;
  }
  out.job = random_id();
  std::lock_guard lock(jobs_mu_);
  jobs_.emplace(out.job, std::move(job));
  return out;
}

json SessionStore::job(const std::string& session, const std::string& job) const {
  std::shared_ptr<Job> j;
  {
    std::lock_guard lock(jobs_mu_);
    auto it = jobs_.find(job);
    if (it == jobs_.end() || it->second->session != session) {
      throw NotFound("unknown job '" + job + "'");
    }
    j = it->second;
  }
  if (j->result.wait_for(std::chrono::seconds(0)) != std::future_status::ready) {
    return {{"status", "running"}};
  }
  return {{"status", "done"}, {"result", j->result.get()}};
}

json SessionStore::accept_children(const std::string& session, const std::string& node,
                                   const std::vector<ChildSpec>& children,
                                   const std::vector<RequirementId>& removed) {
  if (children.empty() && removed.empty()) {
    throw DomainError("select at least one coalition or requirement to remove");
  }
  return find(session)->mutate(*this, [&](SessionTree& tree) {
    auto& n = node_of(tree, node);
    require_not_terminated(n);
    if (!n.last_report) throw Conflict("node " + node + " has not been decomposed");
    const auto& report = *n.last_report;

    std::set<std::size_t> taken;
    for (const auto& c : n.children) taken.insert(*node_of(tree, c).source_coalition);
    PrimitiveView view(n.primitive);
    const auto root_ids = id_set(node_of(tree, tree.root).primitive);
    for (const auto& id : removed) {
      if (!view.find(id)) throw DomainError("requirement '" + id + "' is not in node " + node);
      if (!root_ids.count(id)) {
        throw DomainError("requirement '" + id + "' was added by an edit and cannot be removed");
      }
    }

    json created = json::array();
    json warnings = json::object();
    for (const auto& spec : children) {
      if (spec.coalition >= report.decomposition.size()) {
        throw DomainError("node " + node + " has no coalition " + std::to_string(spec.coalition));
      }
      if (!taken.insert(spec.coalition).second) {
        throw Conflict("coalition " + std::to_string(spec.coalition) + " of node " + node +
                       " is already accepted");
      }
      auto restriction =
          restrict_primitive(n.primitive, view.ids(report.decomposition[spec.coalition]),
                             spec.edits);
      SessionNode child;
      child.id = "n" + std::to_string(tree.next_node++);
      child.parent = node;
      child.source_coalition = spec.coalition;
      child.primitive = std::move(restriction.primitive);
      child.primitive.name = n.primitive.name + "/" + child.id;
      child.params = n.params;
      child.warnings = restriction.warnings;
      warnings[child.id] = restriction.warnings;
      created.push_back(child.id);
      n.children.push_back(child.id);
      tree.nodes.emplace(child.id, std::move(child));
    }
    for (const auto& id : removed) {
      if (std::find(tree.removed.begin(), tree.removed.end(), id) == tree.removed.end()) {
        tree.removed.push_back(id);
      }
    }
    return json{{"children", std::move(created)}, {"warnings", std::move(warnings)}};
  });
}

json SessionStore::terminate(const std::string& session, const std::string& node) {
  return find(session)->mutate(*this, [&](SessionTree& tree) {
    auto& n = node_of(tree, node);
    require_not_terminated(n);
    n.status = NodeStatus::kTerminated;
    return node_to_json(n);
  });
}

json SessionStore::what_if(const std::string& session, const std::string& node,
                           const std::optional<GameParams>& params,
                           const std::optional<SolveMode>& mode) const {
  auto tree = find(session)->get();
  const auto& n = node_of(*tree, node);
  const GameParams chosen = params.value_or(n.params);
  if (auto v = validate_params(chosen); !v.empty()) throw ValidationError(std::move(v));
  const SolveMode m = mode ? *mode : SolveMode::k_cohesive(chosen.k);
  json out = solve_payload(n.primitive, chosen, m, nullptr);
  out["node"] = node;
  out["params"] = params_to_json(chosen);
  return out;
}

json SessionStore::export_session(const std::string& session) const {
  return export_architecture(*find(session)->get());
}

json SessionStore::interaction_graph(const std::string& session, const std::string& node) const {
  auto tree = find(session)->get();
  const auto& n = node_of(*tree, node);
  GameContext ctx(n.primitive, n.params);
  json out = interaction_graph_json(ctx);
  json clusters = json::array();
  if (n.last_report) {
    for (const auto& c : n.last_report->decomposition) clusters.push_back(ctx.view().ids(c));
  }
  out["clusters"] = std::move(clusters);
  return out;
}

std::string SessionStore::interaction_dot(const std::string& session,
                                          const std::string& node) const {
  auto tree = find(session)->get();
  const auto& n = node_of(*tree, node);
  GameContext ctx(n.primitive, n.params);
  return export_dot(ctx, n.last_report ? &n.last_report->decomposition : nullptr);
}

}  // namespace adgame
