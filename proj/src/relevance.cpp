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

#include "adgame/relevance.hpp"

#include <string>
#include <utility>

#include "adgame/errors.hpp"

namespace adgame {

namespace {

bool intersects(const IndexSet& a, const IndexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

void require_distinct(const PrimitiveView& view, std::size_t r1, std::size_t r2) {
  if (r1 >= view.size() || r2 >= view.size()) {
    throw DomainError("requirement index out of range");
  }
  if (r1 == r2) {
    throw DomainError("relevance is defined for distinct requirements only ('" +
                      view.id(r1) + "' given twice)");
  }
}

bool same_general_scenario(const PrimitiveView& view, std::size_t q1,
                           std::size_t q2) {
  return view.requirement(q1).general_scenario ==
         view.requirement(q2).general_scenario;
}

}  // namespace

bool are_relevant(const PrimitiveView& view, std::size_t r1, std::size_t r2,
                  DependencyClosure closure) {
  require_distinct(view, r1, r2);
  const bool shared_constraint =
      intersects(view.constraints_of(r1), view.constraints_of(r2));
  const bool s1 = view.is_scenario(r1);
  const bool s2 = view.is_scenario(r2);

  if (!s1 && !s2) {
    return intersects(view.derived_from(r1), view.derived_from(r2)) ||
           intersects(view.dependency_set(r1, closure),
                      view.dependency_set(r2, closure)) ||
           shared_constraint;
  }
  if (s1 && s2) {
    return same_general_scenario(view, r1, r2) ||
           intersects(view.derived_set(r1), view.derived_set(r2)) ||
           shared_constraint;
  }
  std::size_t f = s1 ? r2 : r1;
  std::size_t q = s1 ? r1 : r2;
  return intersects(view.dependency_set(f, closure), view.derived_set(q)) ||
         shared_constraint;
}

double relevance_index(const PrimitiveView& view, const GameParams& params,
                       std::size_t r1, std::size_t r2) {
  require_distinct(view, r1, r2);
  if (auto raw = view.raw_relevance(r1, r2)) return *raw;
  if (!are_relevant(view, r1, r2, params.closure)) return params.lambda;

  const double constraint_term =
      params.gamma * jaccard(view.constraints_of(r1), view.constraints_of(r2));
  const bool s1 = view.is_scenario(r1);
  const bool s2 = view.is_scenario(r2);

  if (!s1 && !s2) {
    return params.alpha *
               jaccard(view.derived_from(r1), view.derived_from(r2)) +
           params.beta * jaccard(view.dependency_set(r1, params.closure),
                                 view.dependency_set(r2, params.closure)) +
           constraint_term;
  }
  if (s1 && s2) {
    return params.beta * jaccard(view.derived_set(r1), view.derived_set(r2)) +
           constraint_term;
  }
  std::size_t f = s1 ? r2 : r1;
  std::size_t q = s1 ? r1 : r2;
  return params.beta * jaccard(view.dependency_set(f, params.closure),
                               view.derived_set(q)) +
         constraint_term;
}

RelevanceTable::RelevanceTable(const PrimitiveView& view, const GameParams& params)
    : n_(view.size()), values_(n_ * n_, 0.0) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      double s = relevance_index(view, params, i, j);
      values_[i * n_ + j] = s;
      values_[j * n_ + i] = s;
    }
  }
}

}  // namespace adgame
