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

#ifndef ADGAME_SRC_SUBSET_SEARCH_HPP
#define ADGAME_SRC_SUBSET_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>

#include "adgame/model.hpp"
#include "adgame/utility.hpp"

namespace adgame::detail {

struct SubsetQuery {
  IndexSet pool;
  // Largest admissible subset size.
  std::size_t max_size = std::numeric_limits<std::size_t>::max();
  // Skip the pool itself (search proper subsets only).
  bool proper_only = false;
};

struct SubsetResult {
  std::optional<Coalition> best;
  double utility = 0.0;
  std::uint64_t evaluated = 0;
};

/// Best non-empty subset of the pool: maximal utility, then minimal
/// cardinality, then lexicographically least member list. Exhaustive over
/// the admissible subsets, with branch-and-bound pruning.
SubsetResult best_subset(const GameContext& ctx, const SubsetQuery& query);

/// Strict "a is preferred to b" under the tie-break above.
bool preferred(double utility_a, const Coalition& a, double utility_b,
               const Coalition& b);

}  // namespace adgame::detail

#endif  // ADGAME_SRC_SUBSET_SEARCH_HPP
