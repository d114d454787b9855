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

// Small conveniences shared by the test binaries.

#ifndef ADGAME_TESTS_FIXTURES_HPP
#define ADGAME_TESTS_FIXTURES_HPP

#include <set>
#include <string>
#include <vector>

#include "adgame/corpus.hpp"
#include "adgame/model.hpp"
#include "adgame/utility.hpp"
#include "oracle.hpp"

namespace fixtures {

inline adgame::GameContext context(const adgame::ModelDocument& doc) {
  return adgame::GameContext(doc);
}

inline adgame::Coalition coalition(const adgame::GameContext& ctx,
                                   const std::vector<std::string>& ids) {
  return ctx.view().coalition(ids);
}

inline double nu(const adgame::GameContext& ctx, const std::vector<std::string>& ids) {
  return adgame::coalition_utility(ctx, coalition(ctx, ids));
}

inline double sigma(const adgame::GameContext& ctx, const std::string& a, const std::string& b) {
  return ctx.sigma(ctx.view().index_of(a), ctx.view().index_of(b));
}

inline adgame::Decomposition decomposition(
    const adgame::GameContext& ctx, const std::vector<std::vector<std::string>>& groups) {
  adgame::Decomposition out;
  for (const auto& g : groups) out.push_back(coalition(ctx, g));
  return out;
}

inline oracle::Ids id_set(const adgame::GameContext& ctx, const adgame::Coalition& c) {
  auto ids = ctx.view().ids(c);
  return oracle::Ids(ids.begin(), ids.end());
}

inline std::vector<oracle::Ids> id_sets(const adgame::GameContext& ctx,
                                        const adgame::Decomposition& d) {
  std::vector<oracle::Ids> out;
  for (const auto& c : d) out.push_back(id_set(ctx, c));
  return out;
}

inline oracle::Game oracle_game(const adgame::GameContext& ctx) {
  return oracle::Game(ctx.primitive(), ctx.params());
}

}  // namespace fixtures

#endif  // ADGAME_TESTS_FIXTURES_HPP
