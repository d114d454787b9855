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

// Requirement model: attribute primitives, game parameters, coalitions.
//
// An attribute primitive bundles functional requirements F, scenarios S,
// design constraints C, the dependency relation on F, the general-scenario
// equivalence on S (stored as one label per scenario) and the derivation
// relation S x F, together with the tradeoff matrix between general
// scenarios. AttributePrimitive is the plain serializable value;
// PrimitiveView is the validated, index-based read model every algorithm
// works on.

#ifndef ADGAME_MODEL_HPP
#define ADGAME_MODEL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace adgame {

using RequirementId = std::string;
using IdPair = std::pair<RequirementId, RequirementId>;

/// Sorted, duplicate-free list of requirement (or constraint) indices.
using IndexSet = std::vector<std::size_t>;

enum class RequirementKind { kFunctional, kScenario };

struct Requirement {
  RequirementId id;
  RequirementKind kind = RequirementKind::kFunctional;
  std::string description;
  // Present exactly when kind == kScenario.
  std::optional<std::string> general_scenario;

  static Requirement functional(RequirementId id, std::string description = {});
  static Requirement scenario(RequirementId id, std::string general_scenario,
                              std::string description = {});

  bool is_scenario() const noexcept {
    return kind == RequirementKind::kScenario;
  }
  bool operator==(const Requirement&) const = default;
};

struct Constraint {
  std::string id;
  std::vector<RequirementId> members;
  bool operator==(const Constraint&) const = default;
};

/// Directed effects between general scenarios, entries in {-1, 0, +1}.
/// Row = the scenario exerting the effect, column = the one receiving it.
class TradeoffMatrix {
 public:
  TradeoffMatrix() = default;
  TradeoffMatrix(std::vector<std::string> labels,
                 std::vector<std::vector<int>> rows);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return labels_.size(); }

  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Entry for (from, to). Throws DomainError on unknown labels.
  int effect(const std::string& from, const std::string& to) const;

  void set(const std::string& from, const std::string& to, int value);

  bool operator==(const TradeoffMatrix&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> rows_;
};

/// Direct relevance-index override for one unordered pair (fixture mode).
struct RawRelevance {
  RequirementId a;
  RequirementId b;
  double sigma = 0.0;
  bool operator==(const RawRelevance&) const = default;
};

struct AttributePrimitive {
  std::string name;
  std::vector<Requirement> requirements;
  std::vector<Constraint> constraints;
  // (f1, f2): f1 depends on f2.
  std::vector<IdPair> depends;
  // (q, f): functional requirement f is derived from scenario q.
  std::vector<IdPair> derives;
  TradeoffMatrix tradeoff;
  std::vector<RawRelevance> raw_relevance;

  bool operator==(const AttributePrimitive&) const = default;
};

/// How the dependency set f(r) is closed over the dependency relation.
enum class DependencyClosure {
  // {r' | r <= r' or r' <= r}; reproduces the worked relevance values.
  kComparable,
  // {r' | r <= r'}.
  kUpward,
};

struct GameParams {
  double alpha = 0.4;
  double beta = 0.3;
  double gamma = 0.3;
  double lambda = -1.3;
  int k = 3;
  DependencyClosure closure = DependencyClosure::kComparable;

  bool operator==(const GameParams&) const = default;
};

inline constexpr double kWeightSumTolerance = 1e-9;

/// A primitive with optional game parameters, as stored in model files.
struct ModelDocument {
  AttributePrimitive primitive;
  std::optional<GameParams> params;
  bool operator==(const ModelDocument&) const = default;
};

/// A set of requirement indices of one primitive.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(std::vector<std::size_t> members);
  Coalition(std::initializer_list<std::size_t> members);

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(std::size_t r) const;
  std::vector<std::size_t>::const_iterator begin() const noexcept {
    return members_.begin();
  }
  std::vector<std::size_t>::const_iterator end() const noexcept {
    return members_.end();
  }

  Coalition united(const Coalition& other) const;

  auto operator<=>(const Coalition&) const = default;

 private:
  std::vector<std::size_t> members_;
};

/// Ordered list of pairwise-disjoint, non-empty coalitions covering R.
using Decomposition = std::vector<Coalition>;

/// Structural violations of `primitive`; empty iff it is well formed.
std::vector<std::string> validate(const AttributePrimitive& primitive);

std::vector<std::string> validate_params(const GameParams& params);

/// Index-based read model of a valid primitive. Immutable after
/// construction; safe to share between threads.
class PrimitiveView {
 public:
  /// Throws ValidationError when `validate(primitive)` is non-empty.
  explicit PrimitiveView(AttributePrimitive primitive);

  const AttributePrimitive& primitive() const noexcept { return primitive_; }
  std::size_t size() const noexcept { return primitive_.requirements.size(); }

  const Requirement& requirement(std::size_t r) const {
    return primitive_.requirements.at(r);
  }
  const RequirementId& id(std::size_t r) const { return requirement(r).id; }
  bool is_scenario(std::size_t r) const { return requirement(r).is_scenario(); }
  bool is_functional(std::size_t r) const { return !is_scenario(r); }

  std::optional<std::size_t> find(const RequirementId& id) const;
  /// Throws DomainError naming `id` when it is unknown.
  std::size_t index_of(const RequirementId& id) const;

  /// f(r). Throws DomainError unless r is functional.
  const IndexSet& dependency_set(std::size_t r,
                                 DependencyClosure closure =
                                     DependencyClosure::kComparable) const;
  /// g(r): the scenarios sharing r's general scenario. r must be a scenario.
  const IndexSet& general_scenario(std::size_t r) const;
  /// c(r): indices into primitive().constraints containing r.
  const IndexSet& constraints_of(std::size_t r) const;
  /// d(q) for a scenario q.
  const IndexSet& derived_set(std::size_t q) const;
  /// d^-1(f) for a functional f.
  const IndexSet& derived_from(std::size_t f) const;

  /// T(g(r1), g(r2)) for two scenarios.
  int tradeoff_effect(std::size_t r1, std::size_t r2) const;

  /// Raw sigma override for {r1, r2}, if any.
  std::optional<double> raw_relevance(std::size_t r1, std::size_t r2) const;

  std::vector<RequirementId> ids(const IndexSet& set) const;
  Coalition coalition(const std::vector<RequirementId>& ids) const;
  std::vector<RequirementId> ids(const Coalition& coalition) const;
  Coalition all() const;

 private:
  void require_functional(std::size_t r, const char* what) const;
  void require_scenario(std::size_t r, const char* what) const;

  AttributePrimitive primitive_;
  std::unordered_map<RequirementId, std::size_t> index_;
  std::vector<std::size_t> label_index_;
  std::vector<IndexSet> depends_comparable_;
  std::vector<IndexSet> depends_upward_;
  std::vector<IndexSet> general_scenario_;
  std::vector<IndexSet> constraints_of_;
  std::vector<IndexSet> derived_;
  std::map<std::pair<std::size_t, std::size_t>, double> raw_;
};

/// Violations of the decomposition invariants (disjoint, exhaustive, no
/// empty coalition, indices in range).
std::vector<std::string> check_decomposition(const PrimitiveView& view,
                                             const Decomposition& decomposition);

}  // namespace adgame

#endif  // ADGAME_MODEL_HPP
