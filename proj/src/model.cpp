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

#include "adgame/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "adgame/errors.hpp"

namespace adgame {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

void normalize(IndexSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

}  // namespace

CapExceeded::CapExceeded(std::size_t size, std::size_t cap)
    : std::runtime_error("exhaustive search refused: " + std::to_string(size) +
                         " requirements exceed the brute-force cap of " +
                         std::to_string(cap)),
      size_(size),
      cap_(cap) {}

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error("invalid model: " + join(violations)),
      violations_(std::move(violations)) {}

Requirement Requirement::functional(RequirementId id, std::string description) {
  return Requirement{std::move(id), RequirementKind::kFunctional,
                     std::move(description), std::nullopt};
}

Requirement Requirement::scenario(RequirementId id, std::string general_scenario,
                                  std::string description) {
  return Requirement{std::move(id), RequirementKind::kScenario,
                     std::move(description), std::move(general_scenario)};
}

// --- TradeoffMatrix ---------------------------------------------------------

TradeoffMatrix::TradeoffMatrix(std::vector<std::string> labels,
                               std::vector<std::vector<int>> rows)
    : labels_(std::move(labels)), rows_(std::move(rows)) {}

std::optional<std::size_t> TradeoffMatrix::index_of(
    const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

int TradeoffMatrix::effect(const std::string& from, const std::string& to) const {
  auto i = index_of(from);
  auto j = index_of(to);
  if (!i) throw DomainError("unknown general scenario '" + from + "'");
  if (!j) throw DomainError("unknown general scenario '" + to + "'");
  return rows_.at(*i).at(*j);
}

void TradeoffMatrix::set(const std::string& from, const std::string& to,
                         int value) {
  auto i = index_of(from);
  auto j = index_of(to);
  if (!i) throw DomainError("unknown general scenario '" + from + "'");
  if (!j) throw DomainError("unknown general scenario '" + to + "'");
  rows_.at(*i).at(*j) = value;
}

// --- Coalition --------------------------------------------------------------

Coalition::Coalition(std::vector<std::size_t> members)
    : members_(std::move(members)) {
  normalize(members_);
}

Coalition::Coalition(std::initializer_list<std::size_t> members)
    : Coalition(std::vector<std::size_t>(members)) {}

bool Coalition::contains(std::size_t r) const {
  return std::binary_search(members_.begin(), members_.end(), r);
}

Coalition Coalition::united(const Coalition& other) const {
  std::vector<std::size_t> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  Coalition c;
  c.members_ = std::move(out);
  return c;
}

// --- validation -------------------------------------------------------------

std::vector<std::string> validate(const AttributePrimitive& p) {
  std::vector<std::string> out;
  std::unordered_map<std::string, RequirementKind> kinds;

  for (const auto& r : p.requirements) {
    if (r.id.empty()) {
      out.push_back("requirement with empty id");
      continue;
    }
    if (!kinds.emplace(r.id, r.kind).second) {
      out.push_back("duplicate requirement id '" + r.id + "'");
    }
    if (r.is_scenario()) {
      if (!r.general_scenario || r.general_scenario->empty()) {
        out.push_back("scenario '" + r.id + "' has no general scenario");
      } else if (!p.tradeoff.index_of(*r.general_scenario)) {
        out.push_back("scenario '" + r.id + "' uses general scenario '" +
                      *r.general_scenario +
                      "' missing from the tradeoff matrix");
      }
    } else if (r.general_scenario) {
      out.push_back("functional requirement '" + r.id +
                    "' carries a general scenario");
    }
  }

  auto kind_of = [&](const std::string& id) -> std::optional<RequirementKind> {
    auto it = kinds.find(id);
    if (it == kinds.end()) return std::nullopt;
    return it->second;
  };

  std::set<std::string> constraint_ids;
  for (const auto& c : p.constraints) {
    if (c.id.empty()) out.push_back("constraint with empty id");
    if (!constraint_ids.insert(c.id).second) {
      out.push_back("duplicate constraint id '" + c.id + "'");
    }
    if (c.members.empty()) {
      out.push_back("constraint '" + c.id + "' has no members");
    }
    for (const auto& m : c.members) {
      if (!kind_of(m)) {
        out.push_back("constraint '" + c.id + "' references unknown requirement '" +
                      m + "'");
      }
    }
  }

  for (const auto& [a, b] : p.depends) {
    auto ka = kind_of(a);
    auto kb = kind_of(b);
    if (!ka || !kb) {
      out.push_back("depends pair (" + a + ", " + b +
                    ") references an unknown requirement");
    } else if (*ka != RequirementKind::kFunctional ||
               *kb != RequirementKind::kFunctional) {
      out.push_back("depends pair (" + a + ", " + b +
                    ") must relate two functional requirements");
    }
  }

  for (const auto& [q, f] : p.derives) {
    auto kq = kind_of(q);
    auto kf = kind_of(f);
    if (!kq || !kf) {
      out.push_back("derives pair (" + q + ", " + f +
                    ") references an unknown requirement");
    } else if (*kq != RequirementKind::kScenario ||
               *kf != RequirementKind::kFunctional) {
      out.push_back("derives pair (" + q + ", " + f +
                    ") must lead from a scenario to a functional requirement");
    }
  }

  const auto& t = p.tradeoff;
  std::set<std::string> labels;
  for (const auto& l : t.labels()) {
    if (!labels.insert(l).second) {
      out.push_back("duplicate general scenario label '" + l + "'");
    }
  }
  if (t.rows().size() != t.labels().size()) {
    out.push_back("tradeoff matrix has " + std::to_string(t.rows().size()) +
                  " rows for " + std::to_string(t.labels().size()) + " labels");
  } else {
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
      const auto& row = t.rows()[i];
      if (row.size() != t.labels().size()) {
        out.push_back("tradeoff row '" + t.labels()[i] + "' has " +
                      std::to_string(row.size()) + " entries");
        continue;
      }
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] < -1 || row[j] > 1) {
          out.push_back("tradeoff entry (" + t.labels()[i] + ", " +
                        t.labels()[j] + ") = " + std::to_string(row[j]) +
                        " is outside {-1, 0, 1}");
        }
      }
      if (row[i] != 0) {
        out.push_back("tradeoff diagonal entry for '" + t.labels()[i] +
                      "' must be 0");
      }
    }
  }

  std::set<std::pair<std::string, std::string>> raw_pairs;
  for (const auto& raw : p.raw_relevance) {
    if (!kind_of(raw.a) || !kind_of(raw.b)) {
      out.push_back("raw relevance (" + raw.a + ", " + raw.b +
                    ") references an unknown requirement");
      continue;
    }
    if (raw.a == raw.b) {
      out.push_back("raw relevance pairs '" + raw.a + "' with itself");
      continue;
    }
    if (!std::isfinite(raw.sigma)) {
      out.push_back("raw relevance (" + raw.a + ", " + raw.b +
                    ") is not finite");
    }
    auto key = std::minmax(raw.a, raw.b);
    if (!raw_pairs.emplace(key.first, key.second).second) {
      out.push_back("duplicate raw relevance for (" + raw.a + ", " + raw.b +
                    ")");
    }
  }
  return out;
}

std::vector<std::string> validate_params(const GameParams& params) {
  std::vector<std::string> out;
  auto positive = [&](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      out.push_back(std::string(name) + " must be a positive real");
    }
  };
  positive(params.alpha, "alpha");
  positive(params.beta, "beta");
  positive(params.gamma, "gamma");
  double sum = params.alpha + params.beta + params.gamma;
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "alpha + beta + gamma must equal 1 (got " << sum << ")";
    out.push_back(os.str());
  }
  if (!(params.lambda < 0.0) || !std::isfinite(params.lambda)) {
    out.push_back("lambda must be a negative real");
  }
  if (params.k < 1) out.push_back("k must be at least 1");
  return out;
}

// --- PrimitiveView ----------------------------------------------------------

PrimitiveView::PrimitiveView(AttributePrimitive primitive)
    : primitive_(std::move(primitive)) {
  if (auto violations = validate(primitive_); !violations.empty()) {
    throw ValidationError(std::move(violations));
  }
  const std::size_t n = primitive_.requirements.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(primitive_.requirements[i].id, i);

  label_index_.assign(n, 0);
  general_scenario_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = primitive_.requirements[i];
    if (!r.is_scenario()) continue;
    label_index_[i] = *primitive_.tradeoff.index_of(*r.general_scenario);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& s = primitive_.requirements[j];
      if (s.is_scenario() && s.general_scenario == r.general_scenario) {
        general_scenario_[i].push_back(j);
      }
    }
  }

  constraints_of_.assign(n, {});
  for (std::size_t c = 0; c < primitive_.constraints.size(); ++c) {
    for (const auto& m : primitive_.constraints[c].members) {
      constraints_of_[index_.at(m)].push_back(c);
    }
  }
  for (auto& set : constraints_of_) normalize(set);

  derived_.assign(n, {});
  for (const auto& [q, f] : primitive_.derives) {
    std::size_t qi = index_.at(q);
    std::size_t fi = index_.at(f);
    derived_[qi].push_back(fi);
    derived_[fi].push_back(qi);
  }
  for (auto& set : derived_) normalize(set);

  // Reflexive-transitive closure of the dependency relation. Cycles are
  // allowed; a breadth-first search from each node handles them.
  std::vector<IndexSet> succ(n), pred(n);
  for (const auto& [a, b] : primitive_.depends) {
    succ[index_.at(a)].push_back(index_.at(b));
    pred[index_.at(b)].push_back(index_.at(a));
  }
  auto reach = [n](const std::vector<IndexSet>& adj, std::size_t from) {
    std::vector<char> seen(n, 0);
    IndexSet out{from};
    seen[from] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (std::size_t next : adj[out[head]]) {
        if (!seen[next]) {
          seen[next] = 1;
          out.push_back(next);
        }
      }
    }
    normalize(out);
    return out;
  };
  depends_upward_.assign(n, {});
  depends_comparable_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    if (primitive_.requirements[i].is_scenario()) continue;
    depends_upward_[i] = reach(succ, i);
    IndexSet down = reach(pred, i);
    std::set_union(depends_upward_[i].begin(), depends_upward_[i].end(),
                   down.begin(), down.end(),
                   std::back_inserter(depends_comparable_[i]));
  }

  for (const auto& raw : primitive_.raw_relevance) {
    auto key = std::minmax(index_.at(raw.a), index_.at(raw.b));
    raw_[{key.first, key.second}] = raw.sigma;
  }
}

std::optional<std::size_t> PrimitiveView::find(const RequirementId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PrimitiveView::index_of(const RequirementId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("unknown requirement '" + id + "'");
  return it->second;
}

void PrimitiveView::require_functional(std::size_t r, const char* what) const {
  if (!is_functional(r)) {
    throw DomainError(std::string(what) + " requires a functional requirement, got '" +
                      id(r) + "'");
  }
}

void PrimitiveView::require_scenario(std::size_t r, const char* what) const {
  if (!is_scenario(r)) {
    throw DomainError(std::string(what) + " requires a scenario, got '" + id(r) +
                      "'");
  }
}

const IndexSet& PrimitiveView::dependency_set(std::size_t r,
                                              DependencyClosure closure) const {
  require_functional(r, "dependency_set");
  return closure == DependencyClosure::kComparable ? depends_comparable_[r]
                                                   : depends_upward_[r];
}

const IndexSet& PrimitiveView::general_scenario(std::size_t r) const {
  require_scenario(r, "general_scenario");
  return general_scenario_[r];
}

const IndexSet& PrimitiveView::constraints_of(std::size_t r) const {
  return constraints_of_.at(r);
}

const IndexSet& PrimitiveView::derived_set(std::size_t q) const {
  require_scenario(q, "derived_set");
  return derived_[q];
}

const IndexSet& PrimitiveView::derived_from(std::size_t f) const {
  require_functional(f, "derived_from");
  return derived_[f];
}

int PrimitiveView::tradeoff_effect(std::size_t r1, std::size_t r2) const {
  require_scenario(r1, "tradeoff_effect");
  require_scenario(r2, "tradeoff_effect");
  return primitive_.tradeoff.rows()[label_index_[r1]][label_index_[r2]];
}

std::optional<double> PrimitiveView::raw_relevance(std::size_t r1,
                                                   std::size_t r2) const {
  if (raw_.empty()) return std::nullopt;
  auto key = std::minmax(r1, r2);
  auto it = raw_.find({key.first, key.second});
  if (it == raw_.end()) return std::nullopt;
  return it->second;
}

std::vector<RequirementId> PrimitiveView::ids(const IndexSet& set) const {
  std::vector<RequirementId> out;
  out.reserve(set.size());
  for (std::size_t r : set) out.push_back(id(r));
  return out;
}

std::vector<RequirementId> PrimitiveView::ids(const Coalition& coalition) const {
  return ids(coalition.members());
}

Coalition PrimitiveView::coalition(const std::vector<RequirementId>& ids) const {
  std::vector<std::size_t> members;
  members.reserve(ids.size());
  for (const auto& id : ids) members.push_back(index_of(id));
  return Coalition(std::move(members));
}

Coalition PrimitiveView::all() const {
  std::vector<std::size_t> members(size());
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = i;
  return Coalition(std::move(members));
}

std::vector<std::string> check_decomposition(const PrimitiveView& view,
                                             const Decomposition& decomposition) {
  std::vector<std::string> out;
  std::vector<int> owner(view.size(), -1);
  for (std::size_t c = 0; c < decomposition.size(); ++c) {
    if (decomposition[c].empty()) {
      out.push_back("coalition " + std::to_string(c) + " is empty");
    }
    for (std::size_t r : decomposition[c]) {
      if (r >= view.size()) {
        out.push_back("coalition " + std::to_string(c) +
                      " references requirement index " + std::to_string(r) +
                      " outside the primitive");
        continue;
      }
      if (owner[r] >= 0) {
        out.push_back("requirement '" + view.id(r) + "' appears in coalitions " +
                      std::to_string(owner[r]) + " and " + std::to_string(c));
      } else {
        owner[r] = static_cast<int>(c);
      }
    }
  }
  for (std::size_t r = 0; r < view.size(); ++r) {
    if (owner[r] < 0) {
      out.push_back("requirement '" + view.id(r) + "' is not covered");
    }
  }
  return out;
}

}  // namespace adgame
