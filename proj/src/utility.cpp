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

#include "adgame/utility.hpp"

#include <string>
#include <vector>

#include "adgame/errors.hpp"

namespace adgame {

namespace {

GameParams checked(GameParams params) {
  if (auto violations = validate_params(params); !violations.empty()) {
    throw ValidationError(std::move(violations));
  }
  return params;
}

void require_member(const GameContext& ctx, std::size_t r, const Coalition& d) {
  if (r >= ctx.size()) throw DomainError("requirement index out of range");
  if (!d.contains(r)) {
    throw DomainError("requirement '" + ctx.view().id(r) +
                      "' is not a member of the coalition");
  }
}

// Effect factor given a precomputed rho.
double effect_from_rho(int t, double rho) {
  if (t > 0) return rho;
  if (t < 0) return -std::abs(rho);
  return 0.0;
}

}  // namespace

GameContext::State::State(AttributePrimitive primitive, GameParams p)
    : view(std::move(primitive)), params(checked(p)), sigma(view, params) {
  const std::size_t n = view.size();
  scenario.assign(n, 0);
  effect.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) scenario[i] = view.is_scenario(i) ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!scenario[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && scenario[j]) {
        effect[i * n + j] = static_cast<signed char>(view.tradeoff_effect(i, j));
      }
    }
  }
}

GameContext::GameContext(AttributePrimitive primitive, GameParams params)
    : state_(std::make_shared<const State>(std::move(primitive), params)) {}

GameContext::GameContext(const ModelDocument& model, const GameParams& fallback)
    : GameContext(model.primitive, model.params.value_or(fallback)) {}

double coalitional_relevance(const GameContext& ctx, std::size_t r,
                             const Coalition& d) {
  require_member(ctx, r, d);
  double rho = 0.0;
  for (std::size_t s : d) {
    if (s != r) rho += ctx.sigma(r, s);
  }
  return rho;
}

double effect_factor(const GameContext& ctx, std::size_t r1, std::size_t r2,
                     const Coalition& d) {
  require_member(ctx, r1, d);
  require_member(ctx, r2, d);
  if (!ctx.is_scenario(r1) || !ctx.is_scenario(r2)) {
    throw DomainError("effect factor needs two scenarios");
  }
  if (r1 == r2) throw DomainError("effect factor needs distinct scenarios");
  return effect_from_rho(ctx.effect(r1, r2), coalitional_relevance(ctx, r1, d));
}

double pair_interaction(const GameContext& ctx, std::size_t r1, std::size_t r2,
                        const Coalition& d) {
  require_member(ctx, r1, d);
  require_member(ctx, r2, d);
  if (r1 == r2) throw DomainError("interaction needs distinct requirements");
  if (!ctx.is_scenario(r1) || !ctx.is_scenario(r2)) return ctx.sigma(r1, r2);
  return effect_factor(ctx, r1, r2, d) + effect_factor(ctx, r2, r1, d);
}

double coalition_utility(const GameContext& ctx, const Coalition& d) {
  const auto& m = d.members();
  if (m.size() < 2) return 0.0;
  for (std::size_t r : m) {
    if (r >= ctx.size()) throw DomainError("requirement index out of range");
  }
  // rho for each scenario member once, then sum over unordered pairs.
  std::vector<double> rho(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!ctx.is_scenario(m[i])) continue;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != i) rho[i] += ctx.sigma(m[i], m[j]);
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (ctx.is_scenario(m[i]) && ctx.is_scenario(m[j])) {
        total += effect_from_rho(ctx.effect(m[i], m[j]), rho[i]) +
                 effect_from_rho(ctx.effect(m[j], m[i]), rho[j]);
      } else {
        total += ctx.sigma(m[i], m[j]);
      }
    }
  }
  return total;
}

TradeoffMatrix default_tradeoff_matrix() {
  return TradeoffMatrix(
      {"Performance", "Modifiability", "Security", "Availability",
       "Testability", "Usability"},
      {
          {0, -1, 0, 0, 0, -1},
          {-1, 0, 0, 1, 1, 0},
          {-1, 0, 0, 1, -1, -1},
          {0, 0, 0, 0, 0, 0},
          {0, 1, 1, 1, 0, 1},
          {-1, 0, 0, 0, -1, 0},
      });
}

}  // namespace adgame
