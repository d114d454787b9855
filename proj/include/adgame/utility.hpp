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

// Coalition utilities of the decomposition game.
//
// The utility of a coalition D is the sum, over unordered pairs of its
// members, of their interaction in D. A pair involving a functional
// requirement interacts through its relevance index alone; two scenarios
// interact through the sum of their effect factors, which depend on the
// coalitional relevance of each scenario in D and the tradeoff matrix.

#ifndef ADGAME_UTILITY_HPP
#define ADGAME_UTILITY_HPP

#include <cmath>
#include <cstddef>
#include <memory>

#include "adgame/model.hpp"
#include "adgame/relevance.hpp"

namespace adgame {

/// Utilities are sums of small rationals held in doubles; two utilities
/// closer than this are the same payoff.
inline constexpr double kUtilityTolerance = 1e-9;

inline bool utility_greater(double a, double b) {
  return a > b + kUtilityTolerance;
}
inline bool utility_less(double a, double b) {
  return a < b - kUtilityTolerance;
}
inline bool utility_equal(double a, double b) {
  return std::abs(a - b) <= kUtilityTolerance;
}

/// A primitive, its parameters and the precomputed sigma table.
/// Cheap to copy (shared immutable state).
class GameContext {
 public:
  /// Throws ValidationError for an invalid primitive or parameters.
  GameContext(AttributePrimitive primitive, GameParams params);
  GameContext(const ModelDocument& model, const GameParams& fallback = {});

  const PrimitiveView& view() const noexcept { return state_->view; }
  const AttributePrimitive& primitive() const noexcept {
    return state_->view.primitive();
  }
  const GameParams& params() const noexcept { return state_->params; }
  std::size_t size() const noexcept { return state_->view.size(); }

  double sigma(std::size_t r1, std::size_t r2) const {
    return state_->sigma(r1, r2);
  }
  bool is_scenario(std::size_t r) const { return state_->scenario[r] != 0; }
  /// T(g(r1), g(r2)) for two scenarios, 0 otherwise.
  int effect(std::size_t r1, std::size_t r2) const {
    return state_->effect[r1 * state_->view.size() + r2];
  }

 private:
  struct State {
    State(AttributePrimitive primitive, GameParams params);
    PrimitiveView view;
    GameParams params;
    RelevanceTable sigma;
    std::vector<char> scenario;
    std::vector<signed char> effect;
  };
  std::shared_ptr<const State> state_;
};

/// rho(r, D): total relevance from r to the other members of D.
double coalitional_relevance(const GameContext& ctx, std::size_t r,
                             const Coalition& d);

/// epsilon(r1, r2, D) for two distinct scenarios of D.
double effect_factor(const GameContext& ctx, std::size_t r1, std::size_t r2,
                     const Coalition& d);

/// nu(r1, r2, D) for two distinct members of D.
double pair_interaction(const GameContext& ctx, std::size_t r1, std::size_t r2,
                        const Coalition& d);

/// nu(D); 0 for the empty and singleton coalitions.
double coalition_utility(const GameContext& ctx, const Coalition& d);

/// The 6x6 matrix over Performance, Modifiability, Security, Availability,
/// Testability and Usability.
TradeoffMatrix default_tradeoff_matrix();

}  // namespace adgame

#endif  // ADGAME_UTILITY_HPP
