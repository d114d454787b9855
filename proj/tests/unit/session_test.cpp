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

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "adgame/corpus.hpp"
#include "adgame/errors.hpp"
#include "adgame/io.hpp"
#include "adgame/session.hpp"

using namespace adgame;
using nlohmann::json;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("adgame-test-" + name + "-" +
              std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::vector<std::string> members_of(const json& report, std::size_t i) {
  return report["coalitions"][i]["members"].get<std::vector<std::string>>();
}

}  // namespace

TEST_SUITE("session") {

TEST_CASE("restricting the running example to one coalition") {
  const auto parent = running_example().primitive;
  auto r = restrict_primitive(parent, {"q3", "f3"});
  CHECK(r.primitive.requirements.size() == 2);
  CHECK(r.primitive.derives == std::vector<IdPair>{{"q3", "f3"}});
  REQUIRE(r.primitive.constraints.size() == 1);
  CHECK(r.primitive.constraints[0].id == "c1");
  CHECK(r.primitive.constraints[0].members == std::vector<RequirementId>{"q3"});
  CHECK(r.primitive.depends.empty());
  CHECK(r.primitive.tradeoff == parent.tradeoff);
  CHECK(r.primitive.requirements[1].general_scenario == "g2");
  CHECK(r.warnings.empty());
}

TEST_CASE("restriction drops boundary-crossing pairs with warnings") {
  const auto parent = running_example().primitive;
  auto r = restrict_primitive(parent, {"q1", "f1"});
  CHECK(r.primitive.derives == std::vector<IdPair>{{"q1", "f1"}});
  CHECK(r.primitive.depends.empty());
  CHECK_FALSE(r.warnings.empty());
  bool mentions_depends = false;
  for (const auto& w : r.warnings) mentions_depends |= w.find("(f1, f2)") != std::string::npos;
  CHECK(mentions_depends);
}

TEST_CASE("restriction to everything is the identity") {
  for (const auto& name : corpus_names()) {
    const auto parent = corpus_model(name).primitive;
    std::vector<RequirementId> all;
    for (const auto& req : parent.requirements) all.push_back(req.id);
    auto r = restrict_primitive(parent, all);
    CHECK(r.primitive == parent);
    CHECK(r.warnings.empty());
  }
}

TEST_CASE("restriction preconditions and edits") {
  const auto parent = running_example().primitive;
  CHECK_THROWS_AS(restrict_primitive(parent, {}), DomainError);
  CHECK_THROWS_AS(restrict_primitive(parent, {"q3", "zz"}), DomainError);

  Edits edits = edits_from_json(json::parse(R"({
    "functional": [{"id": "f9"}],
    "constraints": [{"id": "c9", "members": ["q3", "f9"]}],
    "derives": [["q3", "f9"]]
  })"));
  auto r = restrict_primitive(parent, {"q3", "f3"}, edits);
  CHECK(r.primitive.requirements.size() == 3);
  CHECK(r.primitive.requirements.back().id == "f9");
  CHECK(r.primitive.derives.size() == 2);
  CHECK(edits_from_json(edits_to_json(edits)).requirements.size() == 1);

  Edits bad;
  bad.derives = {{"f3", "q3"}};
  CHECK_THROWS_AS(restrict_primitive(parent, {"q3", "f3"}, bad), ValidationError);
  CHECK_THROWS_AS(edits_from_json(json::parse(R"({"tradeoff": {}})")), ParseError);
}

TEST_CASE("a full session on the running example") {
  SessionStore store;
  const std::string id = store.create(running_example());
  CHECK(store.list() == std::vector<std::string>{id});
  auto tree = store.snapshot(id);
  CHECK(tree->root == "n0");
  CHECK(tree->nodes.at("n0").params.k == 4);

  auto outcome = store.decompose(id, "n0", SolveMode::k_cohesive(4));
  REQUIRE(outcome.result);
  const json report = (*outcome.result)["report"];
  CHECK(members_of(report, 0) == std::vector<std::string>{"q1", "q2", "f1", "f2"});
  CHECK(members_of(report, 1) == std::vector<std::string>{"q3", "f3"});
  CHECK((*outcome.result)["verification"]["passed"] == true);
  CHECK(store.snapshot(id)->nodes.at("n0").status == NodeStatus::kDecomposed);

  const json before = tree_to_json(*store.snapshot(id));
  const json what_if = store.what_if(id, "n0", std::nullopt, SolveMode::k_cohesive(1));
  CHECK(what_if["report"]["k"] == 1);
  CHECK(what_if["verification"]["passed"] == true);
  CHECK(tree_to_json(*store.snapshot(id)) == before);
  CHECK(store.what_if(id, "n0", std::nullopt, SolveMode::k_cohesive(1)) == what_if);

  CHECK_THROWS_AS(store.export_session(id), Conflict);
  const json accepted = store.accept_children(id, "n0", {{0, {}}, {1, {}}});
  CHECK(accepted["children"] == json{"n1", "n2"});
  CHECK_THROWS_AS(store.accept_children(id, "n0", {{0, {}}}), Conflict);
  CHECK_THROWS_AS(store.accept_children(id, "n0", {{7, {}}}), DomainError);
  CHECK(store.snapshot(id)->nodes.at("n2").primitive.requirements.size() == 2);

  try {
    store.export_session(id);
    FAIL("expected a conflict");
  } catch (const Conflict& e) {
    // Six uncovered root requirements and two open leaves.
    CHECK(e.details().size() == 8);
    CHECK(std::count(e.details().begin(), e.details().end(), "node n1 is not terminated") == 1);
  }
  store.terminate(id, "n1");
  CHECK_THROWS_AS(store.terminate(id, "n1"), Conflict);
  CHECK_THROWS_AS(store.decompose(id, "n1", std::nullopt), Conflict);
  CHECK_THROWS_AS(store.set_params(id, "n1", GameParams{}), Conflict);
  store.terminate(id, "n2");

  const json arch = store.export_session(id);
  CHECK(arch["design_elements"].size() == 2);
  CHECK(arch["model"] == "running-example");
  CHECK(audit(*store.snapshot(id)).empty());
  CHECK(coverage(*store.snapshot(id)).complete());
}

TEST_CASE("removed requirements count as covered") {
  SessionStore store;
  const std::string id = store.create(running_example());
  store.decompose(id, "n0", SolveMode::k_cohesive(4));
  store.accept_children(id, "n0", {{0, {}}}, {"q3", "f3"});
  store.terminate(id, "n1");
  const json arch = store.export_session(id);
  CHECK(arch["removed"] == json{"q3", "f3"});
  CHECK_THROWS_AS(store.accept_children(id, "n0", {}, {"nope"}), DomainError);
}

TEST_CASE("parameters and lookups") {
  SessionStore store;
  const std::string id = store.create(running_example(), GameParams{});
  CHECK(store.snapshot(id)->nodes.at("n0").params == GameParams{});
  GameParams bad;
  bad.gamma = 0.9;
  CHECK_THROWS_AS(store.set_params(id, "n0", bad), ValidationError);
  CHECK_THROWS_AS(store.create(running_example(), bad), ValidationError);
  CHECK_THROWS_AS(store.snapshot("missing"), NotFound);
  CHECK_THROWS_AS(store.decompose(id, "n9", std::nullopt), NotFound);
  CHECK_THROWS_AS(store.job(id, "nope"), NotFound);
  CHECK_THROWS_AS(store.accept_children(id, "n0", {{0, {}}}), Conflict);

  store.decompose(id, "n0", std::nullopt);
  GameParams other;
  other.k = 2;
  const json node = store.set_params(id, "n0", other);
  CHECK(node["status"] == "open");
  CHECK((!node.contains("report") || node["report"].is_null()));
}

TEST_CASE("exact decompositions respect the cap") {
  SessionStore store;
  const std::string id = store.create(cos_model());
  CHECK_THROWS_AS(store.decompose(id, "n0", SolveMode::exact()), CapExceeded);
}

TEST_CASE("slow decompositions continue as background jobs") {
  StoreOptions options;
  options.decompose_budget = std::chrono::milliseconds(0);
  SessionStore store(options);
  const std::string id = store.create(cos_model());
  auto outcome = store.decompose(id, "n0", SolveMode::k_cohesive(3));
  if (outcome.result) return;  // finished before the budget check; nothing to poll
  REQUIRE_FALSE(outcome.job.empty());
  json status;
  for (int i = 0; i < 500; ++i) {
    status = store.job(id, outcome.job);
    if (status["status"] == "done") break;
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  REQUIRE(status["status"] == "done");
  CHECK(status["result"]["verification"]["passed"] == true);
  CHECK(store.snapshot(id)->nodes.at("n0").status == NodeStatus::kDecomposed);
}

TEST_CASE("audit flags broken trees") {
  SessionStore store;
  const std::string id = store.create(running_example());
  store.decompose(id, "n0", SolveMode::k_cohesive(4));
  store.accept_children(id, "n0", {{0, {}}, {1, {}}});
  SessionTree tree = *store.snapshot(id);
  CHECK(audit(tree).empty());

  SessionTree orphan = tree;
  orphan.nodes.at("n1").parent = "n2";
  CHECK_FALSE(audit(orphan).empty());

  SessionTree stolen = tree;
  stolen.nodes.at("n2").primitive = restrict_primitive(tree.nodes.at("n0").primitive,
                                                       {"q3", "f3", "q1"})
                                         .primitive;
  CHECK_FALSE(audit(stolen).empty());

  SessionTree missing = tree;
  missing.nodes.erase("n2");
  CHECK_FALSE(audit(missing).empty());

  SessionTree unreported = tree;
  unreported.nodes.at("n0").last_report.reset();
  CHECK_FALSE(audit(unreported).empty());
}

TEST_CASE("trees round-trip through JSON and survive a restart") {
  const auto dir = fresh_dir("persist");
  std::string id;
  json saved;
  {
    StoreOptions options;
    options.directory = dir;
    SessionStore store(options);
    id = store.create(running_example());
    store.decompose(id, "n0", SolveMode::k_cohesive(4));
    store.accept_children(id, "n0", {{1, {}}});
    saved = tree_to_json(*store.snapshot(id));
    CHECK(tree_to_json(tree_from_json(saved)) == saved);
    CHECK(std::filesystem::exists(dir / (id + ".json")));
  }
  std::filesystem::remove(dir / "garbage.json");
  {
    std::ofstream(dir / "garbage.json") << "{not json";
  }
  StoreOptions options;
  options.directory = dir;
  SessionStore reopened(options);
  CHECK(tree_to_json(*reopened.snapshot(id)) == saved);
  CHECK(reopened.load_errors().size() == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("interaction graphs of a node") {
  SessionStore store;
  const std::string id = store.create(running_example());
  json g = store.interaction_graph(id, "n0");
  CHECK(g["clusters"].empty());
  store.decompose(id, "n0", SolveMode::k_cohesive(4));
  g = store.interaction_graph(id, "n0");
  CHECK(g["clusters"].size() == 2);
  CHECK(store.interaction_dot(id, "n0").find("subgraph cluster_1") != std::string::npos);
}

TEST_CASE("node status names") {
  CHECK(to_string(NodeStatus::kOpen) == "open");
  CHECK(to_string(NodeStatus::kDecomposed) == "decomposed");
  CHECK(to_string(NodeStatus::kTerminated) == "terminated");
}

}  // TEST_SUITE
