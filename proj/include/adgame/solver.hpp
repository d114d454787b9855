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

// Solution concepts and solvers for the decomposition game.
//
// A coalition is cohesive when every proper non-empty subset has strictly
// smaller utility (singletons are cohesive); k-cohesive when that holds for
// the subsets of at most k members. A decomposition is expansion-free when no
// union of two of its coalitions is worth strictly more than both parts.
//
// solve_exact peels off, from the remaining requirements, a coalition of
// maximal utility and minimal size until nothing is left; the result is a
// solution. solve_k peels maximal k-cohesive coalitions of size <= k and then
// merges pairs while a union beats both of its parts; the result is a
// k-cohesive solution. Ties are broken by utility, then size, then the
// lexicographic order of member indices, so every run is reproducible.

#ifndef ADGAME_SOLVER_HPP
#define ADGAME_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adgame/model.hpp"
#include "adgame/utility.hpp"

namespace adgame {

struct SolverOptions {
  // Largest coalition (or requirement set) an exhaustive check may examine.
  std::size_t exact_cap = 20;
};

class SolveMode {
 public:
  enum class Kind { kExact, kKCohesive };

  static SolveMode exact() { return SolveMode(Kind::kExact, 0); }
  static SolveMode k_cohesive(int k);

  Kind kind() const noexcept { return kind_; }
  bool is_exact() const noexcept { return kind_ == Kind::kExact; }
  int k() const noexcept { return k_; }
  std::string name() const;

  bool operator==(const SolveMode&) const = default;

 private:
  SolveMode(Kind kind, int k) : kind_(kind), k_(k) {}
  Kind kind_;
  int k_;
};

struct SolveStats {
  std::uint64_t subsets_enumerated = 0;
  std::size_t merges = 0;
  double wall_ms = 0.0;
  // Total utility of the decomposition before the first merge and after
  // each merge (k-cohesive mode only).
  std::vector<double> merge_trace;
};

struct SolveReport {
  Decomposition decomposition;
  std::vector<double> utilities;  // aligned with decomposition
  SolveMode mode = SolveMode::exact();
  SolveStats stats;
};

struct CohesionCheck {
  bool cohesive = true;
  // A maximal-utility proper subset that is worth at least as much.
  std::optional<Coalition> witness;
  double witness_utility = 0.0;
};

struct ExpansionCheck {
  bool expansion_free = true;
  // Indices (i, j), i < j, of a pair whose union beats both parts.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  double union_utility = 0.0;
};

struct CoalitionFailure {
  std::size_t coalition = 0;
  Coalition witness;
  double witness_utility = 0.0;
};

struct MergeFailure {
  std::size_t first = 0;
  std::size_t second = 0;
  double union_utility = 0.0;
};

struct VerificationReport {
  SolveMode mode = SolveMode::exact();
  std::vector<std::string> structural;  // decomposition invariant violations
  std::vector<double> utilities;
  std::vector<CoalitionFailure> cohesion_failures;
  std::vector<MergeFailure> expansion_failures;

  bool passed() const noexcept {
    return structural.empty() && cohesion_failures.empty() &&
           expansion_failures.empty();
  }
};

/// Throws CapExceeded when |d| exceeds options.exact_cap.
CohesionCheck is_cohesive(const GameContext& ctx, const Coalition& d,
                          const SolverOptions& options = {});

/// Subsets of at most k members only; no cap.
CohesionCheck is_k_cohesive(const GameContext& ctx, const Coalition& d, int k);

ExpansionCheck is_expansion_free(const GameContext& ctx,
                                 const Decomposition& decomposition);

/// Collects every structural, cohesion and expansion failure.
VerificationReport verify_solution(const GameContext& ctx,
                                   const Decomposition& decomposition,
                                   const SolveMode& mode,
                                   const SolverOptions& options = {});

/// Throws CapExceeded when the primitive exceeds options.exact_cap.
SolveReport solve_exact(const GameContext& ctx, const SolverOptions& options = {});

/// Best coalition of at most k members of `pool`. Throws DomainError for an
/// empty pool or k < 1.
Coalition max_k_cohesive(const GameContext& ctx, const Coalition& pool, int k);

/// Greedy peeling of maximal k-cohesive coalitions.
Decomposition cohesive_decomposition(const GameContext& ctx, int k);

SolveReport solve_k(const GameContext& ctx, int k);

/// Dispatches on mode.
SolveReport solve(const GameContext& ctx, const SolveMode& mode,
                  const SolverOptions& options = {});

}  // namespace adgame

#endif  // ADGAME_SOLVER_HPP
