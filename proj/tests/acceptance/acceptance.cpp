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

// Acceptance checks. Prints one PASS/FAIL line per criterion. A criterion
// that is unattainable as stated fails with a "known gap" note and the
// evidence; the exit status is non-zero only for other failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "adgame/corpus.hpp"
#include "adgame/io.hpp"
#include "adgame/reduction.hpp"
#include "adgame/solver.hpp"
#include "adgame/utility.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

namespace {

using namespace adgame;
using Clock = std::chrono::steady_clock;

// Tolerances.
constexpr double kValueTol = 1e-9;       // worked example values
constexpr double kMetaSigmaTol = 1e-12;  // within-meta-node relevance
constexpr double kSigmaBudgetMs = 1.0;
constexpr double kPropertyBudgetMs = 60000.0;
constexpr double kCaseStudyBudgetMs = 5000.0;
constexpr std::size_t kCaseStudyReportedCoalitions = 5;

struct Outcome {
  bool pass = true;
  bool known_gap = false;
  std::string detail;
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool near(double a, double b, double tol = kValueTol) { return std::abs(a - b) <= tol; }

std::string num(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && first_failure_.empty()) first_failure_ = what;
    pass_ = pass_ && ok;
  }
  Outcome done(const std::string& summary) const {
    return {pass_, false, pass_ ? summary : "failed: " + first_failure_ + " (" + summary + ")"};
  }

 private:
  bool pass_ = true;
  std::string first_failure_;
};

Outcome relevance_table() {
  const ModelDocument doc = running_example();
  const auto start = Clock::now();
  GameContext ctx(doc);
  const double elapsed = ms_since(start);
  Checker c;
  auto s = [&](const char* a, const char* b) { return fixtures::sigma(ctx, a, b); };
  c.expect(near(s("f1", "f2"), 0.9), "sigma(f1,f2) = " + num(s("f1", "f2")));
  c.expect(near(s("q1", "q3"), 0.05), "sigma(q1,q3) = " + num(s("q1", "q3")));
  const std::vector<std::pair<std::string, std::string>> fours = {
      {"q1", "q2"}, {"q3", "f3"}, {"q1", "f1"}, {"q1", "f2"}, {"q2", "f1"}, {"q2", "f2"}};
  std::size_t others = 0;
  const auto& v = ctx.view();
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      auto pair = std::minmax(v.id(a), v.id(b));
      const bool listed =
          (pair == std::minmax(std::string("f1"), std::string("f2"))) ||
          (pair == std::minmax(std::string("q1"), std::string("q3")));
      bool four = false;
      for (const auto& [x, y] : fours) four |= pair == std::minmax(x, y);
      if (four) {
        c.expect(near(ctx.sigma(a, b), 0.4), "sigma(" + v.id(a) + "," + v.id(b) + ") != 0.4");
      } else if (!listed) {
        ++others;
        c.expect(near(ctx.sigma(a, b), -0.5), "sigma(" + v.id(a) + "," + v.id(b) + ") != -0.5");
      }
    }
  }
  c.expect(others == 7, "expected 7 remaining pairs");
  c.expect(elapsed < kSigmaBudgetMs, "table took " + num(elapsed) + " ms");
  return c.done("15 pairs within 1e-9, table built in " + num(elapsed) + " ms");
}

Outcome example_four() {
  GameContext ctx(running_example());
  const double c = fixtures::nu(ctx, {"q1", "q3", "f3"});
  const double s = fixtures::nu(ctx, {"q3", "f3"});
  Checker k;
  k.expect(near(c, -1.0), "nu({q1,q3,f3}) = " + num(c));
  k.expect(near(s, 0.4), "nu({q3,f3}) = " + num(s));
  return k.done("nu({q1,q3,f3}) = " + num(c) + ", nu({q3,f3}) = " + num(s));
}

Outcome example_five() {
  GameContext ctx(running_example());
  const auto d = fixtures::decomposition(ctx, {{"q1", "q2", "f1", "f2"}, {"q3", "f3"}});
  const auto report = verify_solution(ctx, d, SolveMode::exact());
  const double whole = coalition_utility(ctx, ctx.view().all());
  Checker k;
  k.expect(report.passed(), "verification failed");
  k.expect(report.utilities.size() == 2 && near(report.utilities[0], 2.5) &&
               near(report.utilities[1], 0.4),
           "utilities differ from 2.5 / 0.4");
  k.expect(near(whole, -1.25), "nu(R) = " + num(whole));
  k.expect(whole < 2.5, "nu(R) is not below 2.5");
  return k.done("verified; utilities 2.5 / 0.4; nu(R) = " + num(whole) + " < 2.5");
}

Outcome dilemma() {
  GameContext ctx(dilemma_fixture());
  const double with_d3 = fixtures::nu(ctx, {"d1", "d2", "d3"});
  const double with_d4 = fixtures::nu(ctx, {"d1", "d2", "d4"});
  const double pair = fixtures::nu(ctx, {"d2", "d4"});
  Checker k;
  k.expect(near(with_d3, 0.3), "nu(S+d3) = " + num(with_d3));
  k.expect(near(with_d4, 0.4), "nu(S+d4) = " + num(with_d4));
  k.expect(near(pair, 0.5), "nu({d2,d4}) = " + num(pair));
  return k.done("nu(S+d3) = " + num(with_d3) + ", nu(S+d4) = " + num(with_d4) +
                ", nu({d2,d4}) = " + num(pair));
}

Outcome non_unique() {
  GameContext ctx(prop1_fixture());
  const auto c = fixtures::decomposition(ctx, {{"d1", "d2", "d3"}, {"d4", "d5", "d6"}});
  const auto d = fixtures::decomposition(ctx, {{"d1", "d2", "d3", "d4"}, {"d5", "d6"}});
  const auto game = fixtures::oracle_game(ctx);
  Checker k;
  k.expect(verify_solution(ctx, c, SolveMode::exact()).passed(), "first decomposition rejected");
  k.expect(verify_solution(ctx, d, SolveMode::exact()).passed(), "second decomposition rejected");
  k.expect(game.solution(fixtures::id_sets(ctx, c), 6), "oracle rejects the first");
  k.expect(game.solution(fixtures::id_sets(ctx, d), 6), "oracle rejects the second");
  auto sorted = [](std::vector<oracle::Ids> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  k.expect(sorted(fixtures::id_sets(ctx, c)) != sorted(fixtures::id_sets(ctx, d)),
           "decompositions coincide");
  return k.done("both decompositions verify (library and oracle) and differ");
}

Outcome exact_property() {
  std::mt19937 rng(20260101);
  const auto start = Clock::now();
  Checker k;
  std::size_t largest = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto p = oracle::random_primitive(rng, 10);
    largest = std::max(largest, p.requirements.size());
    GameContext ctx(p, GameParams{});
    const auto report = solve_exact(ctx);
    const auto game = fixtures::oracle_game(ctx);
    k.expect(verify_solution(ctx, report.decomposition, SolveMode::exact()).passed(),
             "library verification, trial " + std::to_string(trial));
    k.expect(game.solution(fixtures::id_sets(ctx, report.decomposition), ctx.size()),
             "brute-force verification, trial " + std::to_string(trial));
  }
  const double elapsed = ms_since(start);
  k.expect(elapsed < kPropertyBudgetMs, "took " + num(elapsed) + " ms");
  return k.done("200 primitives (|R| up to " + std::to_string(largest) + ") in " +
                num(elapsed) + " ms");
}

// Every coalition the merge loop joins beats both of its parts, but two
// positive coalitions can merge into less than their sum. When that is the
// only eligible merge, the total has to fall, so the non-decreasing total is
// reported as a known gap while the solution properties stay hard checks.
Outcome k_property() {
  std::mt19937 rng(20260202);
  const auto start = Clock::now();
  Checker k;
  std::size_t largest = 0;
  std::size_t merges = 0;
  std::size_t falling_runs = 0;
  std::string example;
  for (int trial = 0; trial < 200; ++trial) {
    auto p = oracle::random_primitive(rng, 14);
    largest = std::max(largest, p.requirements.size());
    GameContext ctx(p, GameParams{});
    const int level = 1 + trial % 3;
    const auto report = solve_k(ctx, level);
    const auto game = fixtures::oracle_game(ctx);
    const std::string tag = "trial " + std::to_string(trial);
    for (const auto& c : report.decomposition) {
      k.expect(is_k_cohesive(ctx, c, level).cohesive, "is_k_cohesive, " + tag);
    }
    k.expect(is_expansion_free(ctx, report.decomposition).expansion_free,
             "is_expansion_free, " + tag);
    k.expect(game.solution(fixtures::id_sets(ctx, report.decomposition),
                           static_cast<std::size_t>(level)),
             "brute-force verification, " + tag);
    const auto& trace = report.stats.merge_trace;
    for (std::size_t i = 1; i < trace.size(); ++i) {
      if (trace[i] < trace[i - 1] - kValueTol) {
        if (falling_runs++ == 0) {
          example = tag + " (k=" + std::to_string(level) + "): total " + num(trace[i - 1]) +
                    " -> " + num(trace[i]);
        }
        break;
      }
    }
    merges += report.stats.merges;
  }
  const double elapsed = ms_since(start);
  k.expect(elapsed < kPropertyBudgetMs, "took " + num(elapsed) + " ms");
  const std::string summary = "200 primitives (|R| up to " + std::to_string(largest) +
                              ", k = 1..3, " + std::to_string(merges) + " merges) in " +
                              num(elapsed) + " ms";
  Outcome out = k.done(summary);
  if (out.pass && falling_runs > 0) {
    out.pass = false;
    out.known_gap = true;
    out.detail = "known gap: total utility fell in " + std::to_string(falling_runs) +
                 " of 200 runs, first " + example +
                 "; a merge beats both parts but not their sum. k-cohesion and expansion " +
                 "freedom hold in all runs (" + summary + ")";
  }
  return out;
}

Outcome clique_equivalence() {
  constexpr double gamma = 0.3;
  constexpr double lambda = -0.5;
  SolverOptions options;
  options.exact_cap = 36;
  Checker k;
  std::size_t graphs = 0;
  auto check = [&](const Graph& g) {
    ++graphs;
    const int n = g.nodes();
    GameContext ctx(clique_to_game(g, gamma, lambda));
    const auto report = solve_exact(ctx, options);
    double best = 0.0;
    for (double u : report.utilities) best = std::max(best, u);
    const double l = oracle::max_clique(n, g.edges());
    const std::string tag = "n=" + std::to_string(n) + ", " + std::to_string(g.edges().size()) +
                            " edges";
    k.expect(near(best, l * (l - 1) * gamma / 2), "best " + num(best) + " for " + tag);
    if (n >= 2) {
      const double inside = gamma / (2.0 * (n - 1));
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j < n; ++j) {
          const double s =
              fixtures::sigma(ctx, meta_scenario_id(i, j), meta_scenario_id(i, j + 1));
          k.expect(near(s, inside, kMetaSigmaTol), "meta-node sigma for " + tag);
        }
      }
    }
  };
  for (int n = 1; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      Graph g(n);
      int bit = 0;
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          if (mask >> bit++ & 1) g.add_edge(a, b);
        }
      }
      check(g);
    }
  }
  std::mt19937 rng(20260303);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    Graph g(n);
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        if (rng() % 2) g.add_edge(a, b);
      }
    }
    check(g);
  }
  return k.done(std::to_string(graphs) + " graphs agree with the clique finder");
}

Outcome case_study() {
  GameContext ctx(cos_model());
  const auto start = Clock::now();
  const SolveReport report = payoff_ordered(solve_k(ctx, 3));
  const auto verification = verify_solution(ctx, report.decomposition, SolveMode::k_cohesive(3));
  const double elapsed = ms_since(start);
  const std::string table = report_table(ctx, report);
  Checker k;
  k.expect(verification.passed(), "3-cohesive verification failed");
  k.expect(elapsed < kCaseStudyBudgetMs, "took " + num(elapsed) + " ms");
  k.expect(std::is_sorted(report.utilities.begin(), report.utilities.end(),
                          std::greater<double>()),
           "coalitions not in payoff order");
  k.expect(table.find("ordered by payoff") != std::string::npos, "table header missing");
  std::size_t sized = 0;
  for (const auto& c : report.decomposition) sized += c.size() > 1;
  return k.done(std::to_string(report.decomposition.size()) + " coalitions (" +
                std::to_string(sized) + " with more than one member; reference count " +
                std::to_string(kCaseStudyReportedCoalitions) + ", match not required), " +
                "verified in " + num(elapsed) + " ms");
}

Outcome round_trip() {
  Checker k;
  for (const auto& name : corpus_names()) {
    const ModelDocument doc = corpus_model(name);
    k.expect(parse_model(save_model(doc)) == doc, "round trip of " + name);
    GameContext ctx(doc);
    k.expect(export_dot(ctx) == export_dot(ctx), "DOT of " + name);
  }
  return k.done(std::to_string(corpus_names().size()) +
                " corpus models round-trip; DOT byte-stable");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"example-2 relevance table", relevance_table},
      {"example-4 utilities", example_four},
      {"example-5 solution", example_five},
      {"dilemma utilities", dilemma},
      {"non-unique solutions", non_unique},
      {"exact solver property suite", exact_property},
      {"k-cohesive solver property suite", k_property},
      {"clique reduction equivalence", clique_equivalence},
      {"case study k=3", case_study},
      {"round trip and DOT stability", round_trip},
  };
  int failures = 0;
  int known_gaps = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    if (!o.pass) ++(o.known_gap ? known_gaps : failures);
  }
  std::printf("%d of %zu criteria passed, %d known gap(s), %d unexpected failure(s)\n",
              static_cast<int>(criteria.size()) - failures - known_gaps, criteria.size(),
              known_gaps, failures);
  return failures == 0 ? 0 : 1;
}
