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

#ifndef ADGAME_RELEVANCE_HPP
#define ADGAME_RELEVANCE_HPP

#include <cstddef>
#include <iterator>
#include <vector>

#include "adgame/model.hpp"

namespace adgame {

/// |a ∩ b| / |a ∪ b| over two sorted ranges; 0 when both are empty.
template <typename SortedRangeA, typename SortedRangeB>
double jaccard(const SortedRangeA& a, const SortedRangeB& b) {
  std::size_t common = 0;
  auto ia = std::begin(a);
  auto ib = std::begin(b);
  while (ia != std::end(a) && ib != std::end(b)) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  std::size_t total = static_cast<std::size_t>(std::distance(std::begin(a), std::end(a))) +
                      static_cast<std::size_t>(std::distance(std::begin(b), std::end(b))) -
                      common;
  if (total == 0) return 0.0;
  return static_cast<double>(common) / static_cast<double>(total);
}

/// Whether r1 and r2 are relevant through derivation, dependency,
/// general scenario or a shared constraint. Throws DomainError if r1 == r2.
bool are_relevant(const PrimitiveView& view, std::size_t r1, std::size_t r2,
                  DependencyClosure closure = DependencyClosure::kComparable);

/// Relevance index sigma(r1, r2). A raw override for the pair wins over the
/// computed value. Symmetric. Throws DomainError if r1 == r2.
double relevance_index(const PrimitiveView& view, const GameParams& params,
                       std::size_t r1, std::size_t r2);

/// Dense symmetric table of sigma over all requirement pairs; the diagonal
/// is 0 and never read by the game.
class RelevanceTable {
 public:
  RelevanceTable() = default;
  RelevanceTable(const PrimitiveView& view, const GameParams& params);

  double operator()(std::size_t r1, std::size_t r2) const {
    return values_[r1 * n_ + r2];
  }
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

}  // namespace adgame

#endif  // ADGAME_RELEVANCE_HPP
