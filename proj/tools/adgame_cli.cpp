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

// adgame: batch front end.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.
// A model argument is a file path or corpus:<name>.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "adgame/corpus.hpp"
#include "adgame/errors.hpp"
#include "adgame/io.hpp"
#include "adgame/reduction.hpp"
#include "adgame/solver.hpp"

namespace {

using namespace adgame;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

ModelDocument load_argument(const std::string& arg) {
  const std::string prefix = "corpus:";
  if (arg.rfind(prefix, 0) == 0) return corpus_model(arg.substr(prefix.size()));
  return load_model(arg);
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw ParseError("cannot write '" + *path + "'");
}

std::string fixed(double v) {
  std::ostringstream out;
  out << std::setprecision(10) << report_number(v);
  return out.str();
}

int cmd_validate(const std::string& model_arg) {
  ModelDocument doc = load_argument(model_arg);
  GameContext ctx(doc);
  std::size_t scenarios = 0;
  for (const auto& r : doc.primitive.requirements) scenarios += r.is_scenario() ? 1 : 0;
  std::cout << "valid: '" << doc.primitive.name << "' with "
            << doc.primitive.requirements.size() - scenarios << " functional requirements, "
            << scenarios << " scenarios, " << doc.primitive.constraints.size()
            << " constraints\n";
  return kOk;
}

int cmd_relevance(const std::string& model_arg, bool pairs) {
  GameContext ctx(load_argument(model_arg));
  const auto& view = ctx.view();
  if (pairs) {
    for (std::size_t a = 0; a < view.size(); ++a) {
      for (std::size_t b = a + 1; b < view.size(); ++b) {
        std::cout << view.id(a) << "\t" << view.id(b) << "\t" << fixed(ctx.sigma(a, b)) << "\n";
      }
    }
    return kOk;
  }
  std::size_t width = 6;
  for (std::size_t r = 0; r < view.size(); ++r) width = std::max(width, view.id(r).size());
  const int w = static_cast<int>(width);
  std::cout << std::setw(w) << "";
  for (std::size_t r = 0; r < view.size(); ++r) std::cout << "  " << std::setw(w) << view.id(r);
  std::cout << "\n";
  for (std::size_t a = 0; a < view.size(); ++a) {
    std::cout << std::setw(w) << view.id(a);
    for (std::size_t b = 0; b < view.size(); ++b) {
      std::cout << "  " << std::setw(w) << (a == b ? "-" : fixed(ctx.sigma(a, b)));
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_solve(const std::string& model_arg, std::optional<int> k, bool exact,
              const std::optional<std::string>& out, bool stats, const SolverOptions& options) {
  ModelDocument doc = load_argument(model_arg);
  GameContext ctx(doc);
  const SolveMode mode = exact ? SolveMode::exact() : SolveMode::k_cohesive(k.value_or(ctx.params().k));
  SolveReport report = payoff_ordered(solve(ctx, mode, options));
  auto verification = verify_solution(ctx, report.decomposition, mode, options);
  std::cout << report_table(ctx, report);
  if (stats) {
    std::cout << "Subsets evaluated: " << report.stats.subsets_enumerated
              << "\nMerges: " << report.stats.merges << "\nWall time: " << std::fixed
              << std::setprecision(3) << report.stats.wall_ms << " ms\n"
              << std::defaultfloat;
  }
  std::cout << verification_text(ctx, verification);
  if (out) write_output(out, save_report(ctx, report, stats));
  return verification.passed() ? kOk : kVerificationFailed;
}

int cmd_verify(const std::string& model_arg, const std::string& decomposition_path,
               std::optional<int> k, const SolverOptions& options) {
  GameContext ctx(load_argument(model_arg));
  Decomposition d = parse_decomposition(ctx.view(), read_text_file(decomposition_path));
  const SolveMode mode = k ? SolveMode::k_cohesive(*k) : SolveMode::exact();
  auto verification = verify_solution(ctx, d, mode, options);
  std::cout << verification_text(ctx, verification);
  return verification.passed() ? kOk : kVerificationFailed;
}

int cmd_export_dot(const std::string& model_arg, const std::optional<std::string>& decomposition,
                   const std::optional<std::string>& out) {
  GameContext ctx(load_argument(model_arg));
  if (decomposition) {
    Decomposition d = parse_decomposition(ctx.view(), read_text_file(*decomposition));
    write_output(out, export_dot(ctx, &d));
  } else {
    write_output(out, export_dot(ctx));
  }
  return kOk;
}

int cmd_gen_clique(const std::string& edge_list, double gamma, double lambda,
                   const std::optional<std::string>& out) {
  Graph g = parse_edge_list(read_text_file(edge_list));
  write_output(out, save_model(clique_to_game(g, gamma, lambda)));
  return kOk;
}

int cmd_corpus(const std::optional<std::string>& name, const std::optional<std::string>& out) {
  if (!name) {
    for (const auto& n : corpus_names()) std::cout << n << "\n";
    return kOk;
  }
  write_output(out, save_model(corpus_model(*name)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition games for attribute-driven design"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<unsigned> seed;
  app.add_option("--seed", seed,
                 "Accepted for forward compatibility; every algorithm is deterministic");
  SolverOptions options;
  app.add_option("--cap", options.exact_cap,
                 "Largest requirement set an exhaustive search may examine")
      ->capture_default_str();

  std::string model;
  std::string second;
  std::optional<int> k;
  std::optional<std::string> out;
  std::optional<std::string> decomposition;
  std::optional<std::string> corpus_name;
  bool exact = false;
  bool pairs = false;
  bool stats = false;
  double gamma = 0.0;
  double lambda = 0.0;

  auto* validate = app.add_subcommand("validate", "Check a model");
  validate->add_option("model", model, "Model file or corpus:<name>")->required();

  auto* relevance = app.add_subcommand("relevance", "Print the relevance table");
  relevance->add_option("model", model, "Model file or corpus:<name>")->required();
  relevance->add_flag("--pairs", pairs, "One line per unordered pair");

  auto* solve_cmd = app.add_subcommand("solve", "Compute and verify a decomposition");
  solve_cmd->add_option("model", model, "Model file or corpus:<name>")->required();
  auto* k_opt = solve_cmd->add_option("--k", k, "Cohesion level (default: the model's k)");
  k_opt->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--exact", exact, "Exact solution instead of k-cohesive")->excludes(k_opt);
  solve_cmd->add_option("--out", out, "Write the JSON report here");
  solve_cmd->add_flag("--stats", stats, "Include solver statistics");

  auto* verify = app.add_subcommand("verify", "Check that a decomposition is a solution");
  verify->add_option("model", model, "Model file or corpus:<name>")->required();
  verify->add_option("decomposition", second, "Decomposition JSON file")->required();
  verify->add_option("--k", k, "Check k-cohesion instead of cohesion")->check(CLI::PositiveNumber);

  auto* dot = app.add_subcommand("export-dot", "Print the interaction graph in DOT");
  dot->add_option("model", model, "Model file or corpus:<name>")->required();
  dot->add_option("--decomposition", decomposition, "Cluster by this decomposition");
  dot->add_option("--out", out, "Write the DOT text here");

  auto* clique = app.add_subcommand("gen-clique", "Build the clique game of a graph");
  clique->add_option("edgelist", second, "Edge list file")->required();
  clique->add_option("--gamma", gamma, "Constraint weight in (0, 1)")->required();
  clique->add_option("--lambda", lambda, "Penalty, below -gamma")->required();
  clique->add_option("--out", out, "Write the model here");

  auto* corpus = app.add_subcommand("corpus", "Print a bundled model (or list them)");
  corpus->add_option("name", corpus_name, "Model name");
  corpus->add_option("--out", out, "Write the model here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return cmd_validate(model);
    if (*relevance) return cmd_relevance(model, pairs);
    if (*solve_cmd) return cmd_solve(model, k, exact, out, stats, options);
    if (*verify) return cmd_verify(model, second, k, options);
    if (*dot) return cmd_export_dot(model, decomposition, out);
    if (*clique) return cmd_gen_clique(second, gamma, lambda, out);
    if (*corpus) return cmd_corpus(corpus_name, out);
  } catch (const ValidationError& e) {
    std::cerr << "error: invalid model\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
  } catch (const ParseError& e) {
    std::cerr << "error: cannot parse input: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --cap or use --k)\n";
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}
