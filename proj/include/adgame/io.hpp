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

// Model, decomposition and report formats.
//
// A model file is one JSON object:
//
//   {
//     "name": "running-example",
//     "functional":  [{"id": "f1", "description": "..."}],
//     "scenarios":   [{"id": "q1", "general_scenario": "g1"}],
//     "constraints": [{"id": "c1", "members": ["q1", "q3"]}],
//     "depends":     [["f1", "f2"]],          // f1 depends on f2
//     "derives":     [["q1", "f1"]],          // f1 is derived from q1
//     "tradeoff":    {"labels": ["g1", "g2"], "rows": [[0, 1], [-1, 0]]},
//     "params":      {"alpha": 0.5, "beta": 0.4, "gamma": 0.1,
//                     "lambda": -0.5, "k": 3},
//     "raw_relevance": [{"a": "d1", "b": "d2", "sigma": 0.1}]
//   }
//
// Only "functional" or "scenarios" entries are needed; everything else is
// optional. Requirements are indexed functional-first, then scenarios, in
// file order. Writers emit keys in a fixed order so output is byte-stable.

#ifndef ADGAME_IO_HPP
#define ADGAME_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "adgame/model.hpp"
#include "adgame/solver.hpp"
#include "adgame/utility.hpp"

namespace adgame {

/// Throws ParseError (with the offending field) or, when `check` is set,
/// ValidationError.
ModelDocument model_from_json(const nlohmann::json& doc, bool check = true);
nlohmann::json model_to_json(const ModelDocument& model);

/// Throws ParseError (with line/column for syntax errors) or ValidationError.
ModelDocument parse_model(std::string_view text);
ModelDocument load_model(const std::filesystem::path& path);
std::string save_model(const ModelDocument& model);

GameParams params_from_json(const nlohmann::json& doc);
nlohmann::json params_to_json(const GameParams& params);

/// Accepts {"coalitions": [[ids...], ...]}, a bare array of id arrays, or a
/// report document ({"coalitions": [{"members": [...]}, ...]}).
Decomposition decomposition_from_json(const PrimitiveView& view,
                                      const nlohmann::json& doc);
Decomposition parse_decomposition(const PrimitiveView& view, std::string_view text);
nlohmann::json decomposition_to_json(const PrimitiveView& view,
                                     const Decomposition& decomposition);

/// Utilities in reports are rounded to this many decimal places.
inline constexpr int kReportDecimals = 12;
double report_number(double value);

/// Coalitions ordered by utility (descending, stable). Stats only on request.
nlohmann::json report_to_json(const GameContext& ctx, const SolveReport& report,
                              bool with_stats = false);
std::string save_report(const GameContext& ctx, const SolveReport& report,
                        bool with_stats = false);

/// Inverse of report_to_json; utilities are recomputed from the context.
SolveReport report_from_json(const GameContext& ctx, const nlohmann::json& doc);

/// The same report with coalitions in payoff order (descending, stable).
SolveReport payoff_ordered(const SolveReport& report);

/// Human-readable payoff-ordered coalition table.
std::string report_table(const GameContext& ctx, const SolveReport& report);

nlohmann::json verification_to_json(const GameContext& ctx,
                                    const VerificationReport& report);
std::string verification_text(const GameContext& ctx,
                              const VerificationReport& report);

/// Complete interaction graph over R: blue edges for positive nu(r1, r2, R),
/// red for negative, none for zero; boxes for functional requirements,
/// ellipses for scenarios; one cluster per coalition when given.
std::string export_dot(const GameContext& ctx,
                       const Decomposition* clusters = nullptr);

/// The same graph as an adjacency payload (nodes + signed, weighted edges).
nlohmann::json interaction_graph_json(const GameContext& ctx);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace adgame

#endif  // ADGAME_IO_HPP
