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

#include "adgame/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "adgame/errors.hpp"
#include "subset_search.hpp"

namespace adgame {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

CohesionCheck check_subsets(const GameContext& ctx, const Coalition& d,
                            std::size_t max_size) {
  CohesionCheck out;
  if (d.size() < 2) return out;
  detail::SubsetQuery q{d.members(), max_size, true};
  auto found = detail::best_subset(ctx, q);
  if (!found.best) return out;
  const double whole = coalition_utility(ctx, d);
  const double sub = coalition_utility(ctx, *found.best);
  if (!utility_less(sub, whole)) {
    out.cohesive = false;
    out.witness = std::move(found.best);
    out.witness_utility = sub;
  }
  return out;
}

// Remaining requirements, in index order.
Coalition remove_members(const Coalition& pool, const Coalition& taken) {
  std::vector<std::size_t> rest;
  rest.reserve(pool.size());
  std::set_difference(pool.begin(), pool.end(), taken.begin(), taken.end(),
                      std::back_inserter(rest));
  return Coalition(std::move(rest));
}

std::vector<double> utilities_of(const GameContext& ctx,
                                 const Decomposition& decomposition) {
  std::vector<double> out;
  out.reserve(decomposition.size());
  for (const auto& c : decomposition) out.push_back(coalition_utility(ctx, c));
  return out;
}

Decomposition peel(const GameContext& ctx, std::size_t max_size,
                   std::uint64_t& evaluated) {
  Decomposition out;
  Coalition pool = ctx.view().all();
  while (!pool.empty()) {
    detail::SubsetQuery q{pool.members(), max_size, false};
    auto found = detail::best_subset(ctx, q);
    evaluated += found.evaluated;
    out.push_back(*found.best);
    pool = remove_members(pool, *found.best);
  }
  return out;
}

void require_k(int k) {
  if (k < 1) throw DomainError("cohesion level k must be at least 1");
}

}  // namespace

SolveMode SolveMode::k_cohesive(int k) {
  require_k(k);
  return SolveMode(Kind::kKCohesive, k);
}

std::string SolveMode::name() const {
  return is_exact() ? "exact" : "k-cohesive(" + std::to_string(k_) + ")";
}

CohesionCheck is_cohesive(const GameContext& ctx, const Coalition& d,
                          const SolverOptions& options) {
  if (d.size() > options.exact_cap) throw CapExceeded(d.size(), options.exact_cap);
  return check_subsets(ctx, d, d.size());
}

CohesionCheck is_k_cohesive(const GameContext& ctx, const Coalition& d, int k) {
  require_k(k);
  return check_subsets(ctx, d, static_cast<std::size_t>(k));
}

ExpansionCheck is_expansion_free(const GameContext& ctx,
                                 const Decomposition& decomposition) {
  ExpansionCheck out;
  auto utilities = utilities_of(ctx, decomposition);
  for (std::size_t i = 0; i < decomposition.size(); ++i) {
    for (std::size_t j = i + 1; j < decomposition.size(); ++j) {
      double joined = coalition_utility(ctx, decomposition[i].united(decomposition[j]));
      if (utility_greater(joined, std::max(utilities[i], utilities[j]))) {
        out.expansion_free = false;
        out.witness = {i, j};
        out.union_utility = joined;
        return out;
      }
    }
  }
  return out;
}

VerificationReport verify_solution(const GameContext& ctx,
                                   const Decomposition& decomposition,
                                   const SolveMode& mode,
                                   const SolverOptions& options) {
  VerificationReport report;
  report.mode = mode;
  report.structural = check_decomposition(ctx.view(), decomposition);
  if (!report.structural.empty()) return report;

  if (mode.is_exact()) {
    for (const auto& c : decomposition) {
      if (c.size() > options.exact_cap) throw CapExceeded(c.size(), options.exact_cap);
    }
  }
  report.utilities = utilities_of(ctx, decomposition);
  for (std::size_t i = 0; i < decomposition.size(); ++i) {
    auto check = mode.is_exact() ? is_cohesive(ctx, decomposition[i], options)
                                 : is_k_cohesive(ctx, decomposition[i], mode.k());
    if (!check.cohesive) {
      report.cohesion_failures.push_back({i, *check.witness, check.witness_utility});
    }
  }
  for (std::size_t i = 0; i < decomposition.size(); ++i) {
    for (std::size_t j = i + 1; j < decomposition.size(); ++j) {
      double joined = coalition_utility(ctx, decomposition[i].united(decomposition[j]));
      if (utility_greater(joined,
                          std::max(report.utilities[i], report.utilities[j]))) {
        report.expansion_failures.push_back({i, j, joined});
      }
    }
  }
  return report;
}

SolveReport solve_exact(const GameContext& ctx, const SolverOptions& options) {
  if (ctx.size() > options.exact_cap) {
    throw CapExceeded(ctx.size(), options.exact_cap);
  }
  const auto start = Clock::now();
  SolveReport report;
  report.mode = SolveMode::exact();
  report.decomposition = peel(ctx, ctx.size(), report.stats.subsets_enumerated);
  report.utilities = utilities_of(ctx, report.decomposition);
  report.stats.wall_ms = elapsed_ms(start);
  return report;
}

Coalition max_k_cohesive(const GameContext& ctx, const Coalition& pool, int k) {
  require_k(k);
  if (pool.empty()) throw DomainError("max_k_cohesive needs a non-empty pool");
  for (std::size_t r : pool) {
    if (r >= ctx.size()) throw DomainError("requirement index out of range");
  }
  detail::SubsetQuery q{pool.members(), static_cast<std::size_t>(k), false};
  return *detail::best_subset(ctx, q).best;
}

Decomposition cohesive_decomposition(const GameContext& ctx, int k) {
  require_k(k);
  std::uint64_t evaluated = 0;
  return peel(ctx, static_cast<std::size_t>(k), evaluated);
}

SolveReport solve_k(const GameContext& ctx, int k) {
  require_k(k);
  const auto start = Clock::now();
  SolveReport report;
  report.mode = SolveMode::k_cohesive(k);
  auto& d = report.decomposition;
  d = peel(ctx, static_cast<std::size_t>(k), report.stats.subsets_enumerated);
  auto u = utilities_of(ctx, d);

  auto total = [&u] { return std::accumulate(u.begin(), u.end(), 0.0); };
  report.stats.merge_trace.push_back(total());

  // Merge the first pair (in list order) whose union beats both parts, then
  // rescan from the start, until no such pair remains.
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < d.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < d.size() && !merged; ++j) {
        Coalition joined = d[i].united(d[j]);
        double value = coalition_utility(ctx, joined);
        if (utility_greater(value, u[i]) && utility_greater(value, u[j])) {
          d[i] = std::move(joined);
          u[i] = value;
          d.erase(d.begin() + static_cast<std::ptrdiff_t>(j));
          u.erase(u.begin() + static_cast<std::ptrdiff_t>(j));
          ++report.stats.merges;
          report.stats.merge_trace.push_back(total());
          merged = true;
        }
      }
    }
  }
  report.utilities = std::move(u);
  report.stats.wall_ms = elapsed_ms(start);
  return report;
}

SolveReport solve(const GameContext& ctx, const SolveMode& mode,
                  const SolverOptions& options) {
  return mode.is_exact() ? solve_exact(ctx, options) : solve_k(ctx, mode.k());
}

}  // namespace adgame
