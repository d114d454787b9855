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

// Reference implementations for tests. They work on requirement ids and
// std::set, recompute every relation from the raw primitive on each call and
// share no code with the library beyond its plain data types.

#ifndef ADGAME_TESTS_ORACLE_HPP
#define ADGAME_TESTS_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adgame/model.hpp"

namespace oracle {

using Ids = std::set<std::string>;
using adgame::AttributePrimitive;
using adgame::GameParams;

inline constexpr double kTol = 1e-9;

class Game {
 public:
  Game(AttributePrimitive p, GameParams params) : p_(std::move(p)), params_(params) {
    for (const auto& r : p_.requirements) {
      kind_[r.id] = r.is_scenario();
      if (r.general_scenario) label_[r.id] = *r.general_scenario;
    }
    for (const auto& a : p_.requirements) {
      for (const auto& b : p_.requirements) {
        if (a.id != b.id) memo_[{a.id, b.id}] = compute_sigma(a.id, b.id);
      }
    }
  }

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    for (const auto& r : p_.requirements) out.push_back(r.id);
    return out;
  }
  bool scenario(const std::string& r) const { return kind_.at(r); }

  // Reflexive-transitive successors (up) or predecessors (down) under depends.
  Ids reach(const std::string& r, bool up) const {
    Ids seen = {r};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& [a, b] : p_.depends) {
        const std::string& from = up ? a : b;
        const std::string& to = up ? b : a;
        if (seen.count(from) && !seen.count(to)) {
          seen.insert(to);
          grew = true;
        }
      }
    }
    return seen;
  }

  Ids f(const std::string& r) const {
    Ids out = reach(r, true);
    if (params_.closure == adgame::DependencyClosure::kComparable) {
      Ids down = reach(r, false);
      out.insert(down.begin(), down.end());
    }
    return out;
  }
  Ids d(const std::string& q) const {
    Ids out;
    for (const auto& [a, b] : p_.derives) {
      if (a == q) out.insert(b);
    }
    return out;
  }
  Ids d_inv(const std::string& fr) const {
    Ids out;
    for (const auto& [a, b] : p_.derives) {
      if (b == fr) out.insert(a);
    }
    return out;
  }
  Ids c(const std::string& r) const {
    Ids out;
    for (const auto& con : p_.constraints) {
      if (std::count(con.members.begin(), con.members.end(), r)) out.insert(con.id);
    }
    return out;
  }

  static bool meets(const Ids& a, const Ids& b) {
    for (const auto& x : a) {
      if (b.count(x)) return true;
    }
    return false;
  }
  static double jaccard(const Ids& a, const Ids& b) {
    Ids u = a;
    u.insert(b.begin(), b.end());
    if (u.empty()) return 0.0;
    std::size_t inter = 0;
    for (const auto& x : a) inter += b.count(x);
    return static_cast<double>(inter) / static_cast<double>(u.size());
  }

  double sigma(const std::string& a, const std::string& b) const { return memo_.at({a, b}); }

  double compute_sigma(std::string a, std::string b) const {
    for (const auto& e : p_.raw_relevance) {
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.sigma;
    }
    const bool sa = scenario(a);
    const bool sb = scenario(b);
    if (!sa && !sb) {
      if (!meets(d_inv(a), d_inv(b)) && !meets(f(a), f(b)) && !meets(c(a), c(b))) {
        return params_.lambda;
      }
      return params_.alpha * jaccard(d_inv(a), d_inv(b)) +
             params_.beta * jaccard(f(a), f(b)) + params_.gamma * jaccard(c(a), c(b));
    }
    if (sa && sb) {
      if (label_.at(a) != label_.at(b) && !meets(d(a), d(b)) && !meets(c(a), c(b))) {
        return params_.lambda;
      }
      return params_.beta * jaccard(d(a), d(b)) + params_.gamma * jaccard(c(a), c(b));
    }
    if (sa) std::swap(a, b);  // a functional, b scenario
    if (!meets(f(a), d(b)) && !meets(c(a), c(b))) return params_.lambda;
    return params_.beta * jaccard(f(a), d(b)) + params_.gamma * jaccard(c(a), c(b));
  }

  int tradeoff(const std::string& a, const std::string& b) const {
    const auto& labels = p_.tradeoff.labels();
    auto ia = std::find(labels.begin(), labels.end(), label_.at(a)) - labels.begin();
    auto ib = std::find(labels.begin(), labels.end(), label_.at(b)) - labels.begin();
    return p_.tradeoff.rows()[ia][ib];
  }

  double rho(const std::string& r, const Ids& D) const {
    double sum = 0.0;
    for (const auto& s : D) {
      if (s != r) sum += sigma(r, s);
    }
    return sum;
  }
  double epsilon(const std::string& a, const std::string& b, const Ids& D) const {
    switch (tradeoff(a, b)) {
      case 1:
        return rho(a, D);
      case -1:
        return -std::abs(rho(a, D));
      default:
        return 0.0;
    }
  }
  double interaction(const std::string& a, const std::string& b, const Ids& D) const {
    if (!scenario(a) || !scenario(b)) return sigma(a, b);
    return epsilon(a, b, D) + epsilon(b, a, D);
  }
  double utility(const Ids& D) const {
    std::vector<std::string> v(D.begin(), D.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) sum += interaction(v[i], v[j], D);
    }
    return sum;
  }

  // Non-empty proper subsets of D with at most `max_size` members.
  template <typename Fn>
  static void for_subsets(const Ids& D, std::size_t max_size, Fn&& fn) {
    std::vector<std::string> v(D.begin(), D.end());
    const std::uint64_t full = (std::uint64_t{1} << v.size()) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_size) continue;
      Ids sub;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (mask >> i & 1) sub.insert(v[i]);
      }
      fn(sub);
    }
  }

  bool cohesive(const Ids& D, std::size_t max_size) const {
    const double whole = utility(D);
    bool ok = true;
    for_subsets(D, max_size, [&](const Ids& sub) {
      if (ok && !(utility(sub) < whole - kTol)) ok = false;
    });
    return ok;
  }

  bool expansion_free(const std::vector<Ids>& dec) const {
    for (std::size_t i = 0; i < dec.size(); ++i) {
      for (std::size_t j = i + 1; j < dec.size(); ++j) {
        Ids u = dec[i];
        u.insert(dec[j].begin(), dec[j].end());
        if (utility(u) > std::max(utility(dec[i]), utility(dec[j])) + kTol) return false;
      }
    }
    return true;
  }

  bool partition(const std::vector<Ids>& dec) const {
    Ids seen;
    std::size_t count = 0;
    for (const auto& D : dec) {
      if (D.empty()) return false;
      seen.insert(D.begin(), D.end());
      count += D.size();
    }
    auto all = ids();
    return count == all.size() && seen == Ids(all.begin(), all.end());
  }

  /// Solution (max_size = |R|) or k-cohesive solution.
  bool solution(const std::vector<Ids>& dec, std::size_t max_size) const {
    if (!partition(dec)) return false;
    for (const auto& D : dec) {
      if (!cohesive(D, max_size)) return false;
    }
    return expansion_free(dec);
  }

 private:
  AttributePrimitive p_;
  GameParams params_;
  std::map<std::string, bool> kind_;
  std::map<std::string, std::string> label_;
  std::map<std::pair<std::string, std::string>, double> memo_;
};

/// Size of a largest clique, by checking every node subset.
inline int max_clique(int n, const std::set<std::pair<int, int>>& edges) {
  int best = n > 0 ? 1 : 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool clique = true;
    for (int a = 0; a < n && clique; ++a) {
      for (int b = a + 1; b < n && clique; ++b) {
        if ((mask >> a & 1) && (mask >> b & 1) && !edges.count({a + 1, b + 1})) clique = false;
      }
    }
    if (clique) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

inline bool is_clique(const std::vector<int>& nodes, const std::set<std::pair<int, int>>& edges) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      int a = std::min(nodes[i], nodes[j]);
      int b = std::max(nodes[i], nodes[j]);
      if (!edges.count({a, b})) return false;
    }
  }
  return true;
}

/// A random valid primitive with 1..max_size requirements: random kinds,
/// labels over up to three general scenarios, a random tradeoff matrix with a
/// zero diagonal, random depends/derives pairs and random constraints.
inline AttributePrimitive random_primitive(std::mt19937& rng, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  AttributePrimitive p;
  p.name = "random";
  const std::size_t n = size_dist(rng);
  const int label_count = 1 + static_cast<int>(rng() % 3);
  std::vector<std::string> labels;
  for (int i = 0; i < label_count; ++i) labels.push_back("g" + std::to_string(i));
  std::vector<std::vector<int>> rows(labels.size(), std::vector<int>(labels.size(), 0));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (i != j) rows[i][j] = static_cast<int>(rng() % 3) - 1;
    }
  }
  p.tradeoff = adgame::TradeoffMatrix(labels, rows);

  std::vector<std::string> fs, ss;
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng)) {
      ss.push_back("s" + std::to_string(i));
      p.requirements.push_back(
          adgame::Requirement::scenario(ss.back(), labels[rng() % labels.size()]));
    } else {
      fs.push_back("f" + std::to_string(i));
      p.requirements.push_back(adgame::Requirement::functional(fs.back()));
    }
  }
  for (const auto& a : fs) {
    for (const auto& b : fs) {
      if (a != b && unit(rng) < 0.25) p.depends.emplace_back(a, b);
    }
  }
  for (const auto& q : ss) {
    for (const auto& f : fs) {
      if (unit(rng) < 0.3) p.derives.emplace_back(q, f);
    }
  }
  const int constraint_count = static_cast<int>(rng() % 3);
  for (int c = 0; c < constraint_count; ++c) {
    adgame::Constraint con{"c" + std::to_string(c), {}};
    for (const auto& r : p.requirements) {
      if (unit(rng) < 0.35) con.members.push_back(r.id);
    }
    if (con.members.empty()) con.members.push_back(p.requirements[rng() % n].id);
    p.constraints.push_back(std::move(con));
  }
  return p;
}

}  // namespace oracle

#endif  // ADGAME_TESTS_ORACLE_HPP
