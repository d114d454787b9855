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

#include "adgame/reduction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "adgame/errors.hpp"

namespace adgame {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw DomainError("graph node count must be non-negative");
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_) {
    throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") has an endpoint outside 1.." + std::to_string(n_));
  }
  if (u == v) throw DomainError("self-loop on node " + std::to_string(u));
  edges_.emplace(std::min(u, v), std::max(u, v));
}

bool Graph::adjacent(int u, int v) const {
  return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int declared = -1;
  int largest = 0;
  std::vector<std::pair<int, int>> pairs;
  auto fail = [&](const std::string& what) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "nodes") {
      int n = 0;
      if (!(fields >> n) || n < 0) fail("expected 'nodes <count>'");
      declared = n;
    } else {
      int u = 0;
      int v = 0;
      try {
        std::size_t used = 0;
        u = std::stoi(first, &used);
        if (used != first.size()) fail("expected two node numbers");
      } catch (const std::logic_error&) {
        fail("expected two node numbers");
      }
      if (!(fields >> v)) fail("expected two node numbers");
      if (u < 1 || v < 1) fail("node numbers start at 1");
      if (u == v) fail("self-loop on node " + std::to_string(u));
      pairs.emplace_back(u, v);
      largest = std::max({largest, u, v});
    }
    std::string extra;
    if (fields >> extra) fail("unexpected trailing text '" + extra + "'");
  }
  const int n = declared >= 0 ? declared : largest;
  if (largest > n) {
    throw ParseError("edge list mentions node " + std::to_string(largest) +
                     " but declares " + std::to_string(n) + " nodes");
  }
  Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

std::string meta_scenario_id(int node, int slot) {
  return "a" + std::to_string(node) + "." + std::to_string(slot);
}

std::vector<IdPair> edge_links(const Graph& graph) {
  // Each node hands out its slots 1, 2, ... to its edges in edge order; a node
  // has at most n-1 edges, so slots never run out.
  std::vector<int> next_slot(static_cast<std::size_t>(graph.nodes()) + 1, 1);
  std::vector<IdPair> out;
  for (auto [u, v] : graph.edges()) {
    out.emplace_back(meta_scenario_id(u, next_slot[u]++),
                     meta_scenario_id(v, next_slot[v]++));
  }
  return out;
}

ModelDocument clique_to_game(const Graph& graph, double gamma, double lambda) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw DomainError("clique reduction needs 0 < gamma < 1");
  }
  if (!(lambda < -gamma)) {
    throw DomainError("clique reduction needs lambda < -gamma");
  }
  const int n = graph.nodes();
  ModelDocument doc;
  auto& p = doc.primitive;
  p.name = "clique-reduction-n" + std::to_string(n);

  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      std::string id = meta_scenario_id(i, j);
      labels.push_back("g" + id.substr(1));
      p.requirements.push_back(Requirement::scenario(id, labels.back()));
    }
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int j2 = j + 1; j2 <= n; ++j2) {
        p.constraints.push_back(
            {"c" + std::to_string(i) + "(" + std::to_string(j) + "," +
                 std::to_string(j2) + ")",
             {meta_scenario_id(i, j), meta_scenario_id(i, j2)}});
      }
    }
  }

  const std::size_t size = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  auto label_of = [n](int node, int slot) {
    return static_cast<std::size_t>((node - 1) * n + (slot - 1));
  };
  std::vector<std::vector<int>> rows(size, std::vector<int>(size, 0));
  for (int i = 1; i <= n; ++i) {
    for (int i2 = 1; i2 <= n; ++i2) {
      if (i == i2 || graph.adjacent(i, i2)) continue;
      for (int j = 1; j <= n; ++j) {
        for (int j2 = 1; j2 <= n; ++j2) rows[label_of(i, j)][label_of(i2, j2)] = -1;
      }
    }
  }
  auto parse_id = [](const std::string& id) {
    auto dot = id.find('.');
    return std::pair{std::stoi(id.substr(1, dot - 1)), std::stoi(id.substr(dot + 1))};
  };
  for (const auto& [a, b] : edge_links(graph)) {
    auto [i, j] = parse_id(a);
    auto [i2, j2] = parse_id(b);
    rows[label_of(i, j)][label_of(i2, j2)] = 1;
    rows[label_of(i2, j2)][label_of(i, j)] = 1;
  }
  p.tradeoff = TradeoffMatrix(std::move(labels), std::move(rows));

  // Pin sigma inside a meta-node to gamma/(2(n-1)) and between adjacent
  // meta-nodes to 0; pairs of non-adjacent nodes share nothing and fall back
  // to lambda.
  if (n >= 2) {
    const double inside = gamma / (2.0 * (n - 1));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int j2 = j + 1; j2 <= n; ++j2) {
          p.raw_relevance.push_back(
              {meta_scenario_id(i, j), meta_scenario_id(i, j2), inside});
        }
      }
    }
    for (auto [u, v] : graph.edges()) {
      for (int j = 1; j <= n; ++j) {
        for (int j2 = 1; j2 <= n; ++j2) {
          p.raw_relevance.push_back(
              {meta_scenario_id(u, j), meta_scenario_id(v, j2), 0.0});
        }
      }
    }
  }

  GameParams params;
  params.alpha = (1.0 - gamma) / 2.0;
  params.beta = 1.0 - gamma - params.alpha;
  params.gamma = gamma;
  params.lambda = lambda;
  params.k = std::max(1, n * n);
  doc.params = params;
  return doc;
}

Coalition meta_clique_coalition(const PrimitiveView& view, const Graph& graph,
                                const std::vector<int>& nodes) {
  std::vector<std::size_t> members;
  for (int node : nodes) {
    if (node < 1 || node > graph.nodes()) {
      throw DomainError("node " + std::to_string(node) + " is outside 1.." +
                        std::to_string(graph.nodes()));
    }
    for (int slot = 1; slot <= graph.nodes(); ++slot) {
      members.push_back(view.index_of(meta_scenario_id(node, slot)));
    }
  }
  return Coalition(std::move(members));
}

ModelDocument prop1_fixture() {
  ModelDocument doc;
  auto& p = doc.primitive;
  p.name = "non-unique";
  for (int i = 1; i <= 6; ++i) {
    p.requirements.push_back(Requirement::functional("d" + std::to_string(i)));
  }
  auto in = [](int x, std::initializer_list<int> group) {
    return std::find(group.begin(), group.end(), x) != group.end();
  };
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) {
      double sigma = 0.0;
      if ((in(i, {1, 2, 3, 4}) && in(j, {1, 2, 3, 4})) ||
          (in(i, {4, 5, 6}) && in(j, {4, 5, 6}))) {
        sigma = 0.1;
      } else {
        sigma = -0.1;  // i in {1,2,3}, j in {5,6}
      }
      p.raw_relevance.push_back(
          {"d" + std::to_string(i), "d" + std::to_string(j), sigma});
    }
  }
  GameParams params;
  params.lambda = -0.1;
  params.k = 6;
  doc.params = params;
  return doc;
}

}  // namespace adgame
