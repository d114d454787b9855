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

// Game generators used as test oracles.
//
// clique_to_game turns an undirected graph on nodes 1..n into a primitive of
// n*n scenarios a<i>.<j>. Row A_i = {a<i>.1 .. a<i>.<n>} is the meta-node of
// graph node i. Every graph edge (i, i') is realized by exactly one scenario
// pair (the "link" of the edge) whose tradeoff entries are +1 in both
// directions; scenarios of non-adjacent nodes have -1 entries and relevance
// lambda. A coalition built from full rows of a clique of size l is worth
// l(l-1)gamma/2, so the best coalition of the game reveals a maximum clique.

#ifndef ADGAME_REDUCTION_HPP
#define ADGAME_REDUCTION_HPP

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adgame/model.hpp"

namespace adgame {

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws DomainError for out-of-range endpoints or self-loops.
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;

  int nodes() const noexcept { return n_; }
  /// Edges as (u, v) with u < v, in lexicographic order.
  const std::set<std::pair<int, int>>& edges() const noexcept { return edges_; }

 private:
  int n_ = 0;
  std::set<std::pair<int, int>> edges_;
};

/// Parses one "u v" pair per line. Blank lines and '#' comments are skipped;
/// a "nodes N" line fixes the node count (otherwise the largest endpoint).
/// Throws ParseError with the offending line number.
Graph parse_edge_list(std::string_view text);

/// Requirement id of scenario a<node>.<slot>.
std::string meta_scenario_id(int node, int slot);

/// Scenario pairs realizing the graph edges, one per edge, in edge order.
std::vector<IdPair> edge_links(const Graph& graph);

/// Throws DomainError unless gamma in (0, 1) and lambda < -gamma.
ModelDocument clique_to_game(const Graph& graph, double gamma, double lambda);

/// Union of the rows A_i for i in `nodes`. Throws DomainError for nodes
/// outside 1..n.
Coalition meta_clique_coalition(const PrimitiveView& view, const Graph& graph,
                                const std::vector<int>& nodes);

/// Six functional requirements d1..d6 whose pair utilities are 0.1 inside
/// {d1..d4} and inside {d4, d5, d6}, and -0.1 between {d1, d2, d3} and
/// {d5, d6}. Admits two distinct solutions.
ModelDocument prop1_fixture();

}  // namespace adgame

#endif  // ADGAME_REDUCTION_HPP
