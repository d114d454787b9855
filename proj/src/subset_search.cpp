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

#include "subset_search.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace adgame::detail {

namespace {

// Subsets are enumerated in lexicographic order of their member lists
// (include element idx, recurse on idx+1.., then exclude it). For every
// partial choice I with open elements O the search keeps, per pool member a:
//   rho_in[a]     sum of sigma(a, y) over y in I, y != a
//   pos_open[a]   sum of max(0, sigma(a, y)) over y in O, y != a
//   fpos_open[a]  the same restricted to pairs with a functional endpoint
//   plus_in, minus_in, plus_open   counts of +1/-1 tradeoff partners
// The utility of I is
//   sum of sigma over functional pairs in I
//   + sum over scenarios a in I of plus_in*rho - minus_in*|rho|,
// and bound() caps every term independently over all D with I ⊆ D ⊆ I ∪ O.
class Search {
 public:
  Search(const GameContext& ctx, const SubsetQuery& q)
      : q_(q), m_(q.pool.size()) {
    sigma_.assign(m_ * m_, 0.0);
    eff_.assign(m_ * m_, 0);
    scen_.assign(m_, 0);
    for (std::size_t a = 0; a < m_; ++a) {
      scen_[a] = ctx.is_scenario(q.pool[a]) ? 1 : 0;
      for (std::size_t b = 0; b < m_; ++b) {
        if (a == b) continue;
        sigma_[a * m_ + b] = ctx.sigma(q.pool[a], q.pool[b]);
        eff_[a * m_ + b] = static_cast<signed char>(ctx.effect(q.pool[a], q.pool[b]));
      }
    }
    state_.assign(m_, kOpen);
    rho_in_.assign(m_, 0.0);
    pos_open_.assign(m_, 0.0);
    fpos_open_.assign(m_, 0.0);
    plus_in_.assign(m_, 0);
    minus_in_.assign(m_, 0);
    plus_open_.assign(m_, 0);
    for (std::size_t a = 0; a < m_; ++a) {
      for (std::size_t b = 0; b < m_; ++b) {
        if (a == b) continue;
        double pos = std::max(0.0, s(a, b));
        pos_open_[a] += pos;
        if (!(scen_[a] && scen_[b])) fpos_open_[a] += pos;
        if (scen_[a] && scen_[b] && e(a, b) > 0) ++plus_open_[a];
      }
    }
  }

  SubsetResult run() {
    SubsetResult out;
    if (m_ == 0 || q_.max_size == 0) return out;
    // Every singleton is worth 0; seed with the lexicographically least one.
    if (!(q_.proper_only && m_ == 1)) {
      best_ = {0};
      best_utility_ = 0.0;
      has_best_ = true;
    }
    extend(0);
    out.evaluated = evaluated_;
    if (has_best_) {
      std::vector<std::size_t> members;
      members.reserve(best_.size());
      for (std::size_t local : best_) members.push_back(q_.pool[local]);
      out.best = Coalition(std::move(members));
      out.utility = best_utility_;
    }
    return out;
  }

 private:
  enum : char { kOpen, kIn, kOut };

  double s(std::size_t a, std::size_t b) const { return sigma_[a * m_ + b]; }
  int e(std::size_t a, std::size_t b) const { return eff_[a * m_ + b]; }
  bool scenario_pair(std::size_t a, std::size_t b) const {
    return scen_[a] && scen_[b];
  }

  void open_to_in(std::size_t x) {
    for (std::size_t a = 0; a < m_; ++a) {
      if (a == x) continue;
      const double sv = s(a, x);
      const double pos = std::max(0.0, sv);
      rho_in_[a] += sv;
      pos_open_[a] -= pos;
      if (scenario_pair(a, x)) {
        const int t = e(a, x);
        if (t > 0) {
          ++plus_in_[a];
          --plus_open_[a];
        } else if (t < 0) {
          ++minus_in_[a];
        }
      } else {
        fpos_open_[a] -= pos;
        if (state_[a] == kIn) fsum_in_ += sv;
      }
    }
    state_[x] = kIn;
    chosen_.push_back(x);
  }

  void in_to_out(std::size_t x) {
    chosen_.pop_back();
    state_[x] = kOut;
    for (std::size_t a = 0; a < m_; ++a) {
      if (a == x) continue;
      const double sv = s(a, x);
      rho_in_[a] -= sv;
      if (scenario_pair(a, x)) {
        const int t = e(a, x);
        if (t > 0) {
          --plus_in_[a];
        } else if (t < 0) {
          --minus_in_[a];
        }
      } else if (state_[a] == kIn) {
        fsum_in_ -= sv;
      }
    }
  }

  void out_to_open(std::size_t x) {
    state_[x] = kOpen;
    for (std::size_t a = 0; a < m_; ++a) {
      if (a == x) continue;
      const double pos = std::max(0.0, s(a, x));
      pos_open_[a] += pos;
      if (scenario_pair(a, x)) {
        if (e(a, x) > 0) ++plus_open_[a];
      } else {
        fpos_open_[a] += pos;
      }
    }
  }

  double value() const {
    double v = fsum_in_;
    for (std::size_t a : chosen_) {
      if (!scen_[a]) continue;
      const double rho = rho_in_[a];
      v += plus_in_[a] * rho - minus_in_[a] * std::abs(rho);
    }
    return v;
  }

  double scenario_bound(std::size_t a) const {
    const double hi = rho_in_[a] + pos_open_[a];
    if (hi > 0.0) {
      const int net = plus_in_[a] + plus_open_[a] - minus_in_[a];
      return net > 0 ? net * hi : 0.0;
    }
    return (plus_in_[a] + minus_in_[a]) * hi;
  }

  double bound() const {
    double ub = fsum_in_;
    for (std::size_t a = 0; a < m_; ++a) {
      if (state_[a] == kOut) continue;
      ub += fpos_open_[a];
      if (!scen_[a]) continue;
      const double b = scenario_bound(a);
      ub += state_[a] == kIn ? b : std::max(0.0, b);
    }
    return ub;
  }

  bool promising(double ub, std::size_t min_card) const {
    if (!has_best_) return true;
    if (utility_less(ub, best_utility_)) return false;
    if (!utility_greater(ub, best_utility_) && min_card > best_.size()) {
      return false;
    }
    return true;
  }

  void consider() {
    if (q_.proper_only && chosen_.size() == m_) return;
    ++evaluated_;
    const double v = value();
    bool take = false;
    if (!has_best_ || utility_greater(v, best_utility_)) {
      take = true;
    } else if (!utility_less(v, best_utility_)) {
      take = chosen_.size() < best_.size() ||
             (chosen_.size() == best_.size() &&
              std::lexicographical_compare(chosen_.begin(), chosen_.end(),
                                           best_.begin(), best_.end()));
    }
    if (take) {
      best_ = chosen_;
      best_utility_ = v;
      has_best_ = true;
    }
  }

  void extend(std::size_t start) {
    std::size_t idx = start;
    for (; idx < m_; ++idx) {
      if (chosen_.size() >= q_.max_size) break;
      if (!promising(bound(), chosen_.size() + 1)) break;
      open_to_in(idx);
      consider();
      if (idx + 1 < m_ && chosen_.size() < q_.max_size) extend(idx + 1);
      in_to_out(idx);
    }
    for (std::size_t j = start; j < idx; ++j) out_to_open(j);
  }

  const SubsetQuery& q_;
  std::size_t m_;
  std::vector<double> sigma_;
  std::vector<signed char> eff_;
  std::vector<char> scen_;

  std::vector<char> state_;
  std::vector<double> rho_in_, pos_open_, fpos_open_;
  std::vector<int> plus_in_, minus_in_, plus_open_;
  double fsum_in_ = 0.0;
  std::vector<std::size_t> chosen_;

  bool has_best_ = false;
  std::vector<std::size_t> best_;
  double best_utility_ = 0.0;
  std::uint64_t evaluated_ = 0;
};

}  // namespace

SubsetResult best_subset(const GameContext& ctx, const SubsetQuery& query) {
  return Search(ctx, query).run();
}

bool preferred(double utility_a, const Coalition& a, double utility_b,
               const Coalition& b) {
  if (utility_greater(utility_a, utility_b)) return true;
  if (utility_less(utility_a, utility_b)) return false;
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

}  // namespace adgame::detail
