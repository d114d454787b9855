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

#include "adgame/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "adgame/errors.hpp"

namespace adgame {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

const json& member(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) field_error(path + key, "missing");
  return *it;
}

std::string as_string(const json& v, const std::string& field) {
  if (!v.is_string()) field_error(field, "expected a string");
  return v.get<std::string>();
}

double as_number(const json& v, const std::string& field) {
  if (!v.is_number()) field_error(field, "expected a number");
  return v.get<double>();
}

const json& as_array(const json& v, const std::string& field) {
  if (!v.is_array()) field_error(field, "expected an array");
  return v;
}

void check_object(const json& v, const std::string& field,
                  std::initializer_list<const char*> allowed) {
  if (!v.is_object()) field_error(field, "expected an object");
  for (auto it = v.begin(); it != v.end(); ++it) {
    bool known = std::any_of(allowed.begin(), allowed.end(),
                             [&](const char* k) { return it.key() == k; });
    if (!known) {
      field_error(field.empty() ? it.key() : field + "." + it.key(), "unknown field");
    }
  }
}

std::string optional_string(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) return {};
  return as_string(*it, path + key);
}

std::vector<IdPair> read_pairs(const json& doc, const char* key) {
  std::vector<IdPair> out;
  auto it = doc.find(key);
  if (it == doc.end()) return out;
  const std::string field = key;
  as_array(*it, field);
  for (std::size_t i = 0; i < it->size(); ++i) {
    const std::string at = field + "[" + std::to_string(i) + "]";
    const json& pair = (*it)[i];
    if (!pair.is_array() || pair.size() != 2) field_error(at, "expected a pair of ids");
    out.emplace_back(as_string(pair[0], at + "[0]"), as_string(pair[1], at + "[1]"));
  }
  return out;
}

std::vector<RequirementId> read_ids(const json& v, const std::string& field) {
  as_array(v, field);
  std::vector<RequirementId> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_string(v[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json pairs_to_json(const std::vector<IdPair>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back(json::array({a, b}));
  return out;
}

// Member ids with scenarios first, each group in model order.
std::vector<RequirementId> listing_order(const PrimitiveView& view, const Coalition& c) {
  std::vector<RequirementId> out;
  for (std::size_t r : c) {
    if (view.is_scenario(r)) out.push_back(view.id(r));
  }
  for (std::size_t r : c) {
    if (view.is_functional(r)) out.push_back(view.id(r));
  }
  return out;
}

std::vector<std::size_t> payoff_order(const std::vector<double>& utilities) {
  std::vector<std::size_t> order(utilities.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return utility_greater(utilities[a], utilities[b]);
  });
  return order;
}

std::string format_number(double v) {
  std::ostringstream out;
  out << std::setprecision(10) << report_number(v);
  std::string s = out.str();
  return s == "-0" ? "0" : s;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

GameParams params_from_json(const json& doc) {
  check_object(doc, "params", {"alpha", "beta", "gamma", "lambda", "k", "closure"});
  GameParams p;
  p.alpha = as_number(member(doc, "params.", "alpha"), "params.alpha");
  p.beta = as_number(member(doc, "params.", "beta"), "params.beta");
  p.gamma = as_number(member(doc, "params.", "gamma"), "params.gamma");
  p.lambda = as_number(member(doc, "params.", "lambda"), "params.lambda");
  if (auto it = doc.find("k"); it != doc.end()) {
    if (!it->is_number_integer()) field_error("params.k", "expected an integer");
    p.k = it->get<int>();
  }
  if (auto it = doc.find("closure"); it != doc.end()) {
    std::string c = as_string(*it, "params.closure");
    if (c == "comparable") {
      p.closure = DependencyClosure::kComparable;
    } else if (c == "upward") {
      p.closure = DependencyClosure::kUpward;
    } else {
      field_error("params.closure", "expected \"comparable\" or \"upward\"");
    }
  }
  return p;
}

json params_to_json(const GameParams& p) {
  json out = json::object();
  out["alpha"] = p.alpha;
  out["beta"] = p.beta;
  out["gamma"] = p.gamma;
  out["lambda"] = p.lambda;
  out["k"] = p.k;
  if (p.closure == DependencyClosure::kUpward) out["closure"] = "upward";
  return out;
}

ModelDocument model_from_json(const json& doc, bool check) {
  check_object(doc, "",
               {"name", "functional", "scenarios", "constraints", "depends", "derives",
                "tradeoff", "params", "raw_relevance"});
  ModelDocument out;
  auto& p = out.primitive;
  p.name = optional_string(doc, "", "name");

  if (auto it = doc.find("functional"); it != doc.end()) {
    as_array(*it, "functional");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = "functional[" + std::to_string(i) + "]";
      const json& e = (*it)[i];
      check_object(e, at, {"id", "description"});
      p.requirements.push_back(
          Requirement::functional(as_string(member(e, at + ".", "id"), at + ".id"),
                                  optional_string(e, at + ".", "description")));
    }
  }
  if (auto it = doc.find("scenarios"); it != doc.end()) {
    as_array(*it, "scenarios");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = "scenarios[" + std::to_string(i) + "]";
      const json& e = (*it)[i];
      check_object(e, at, {"id", "general_scenario", "description"});
      p.requirements.push_back(Requirement::scenario(
          as_string(member(e, at + ".", "id"), at + ".id"),
          as_string(member(e, at + ".", "general_scenario"), at + ".general_scenario"),
          optional_string(e, at + ".", "description")));
    }
  }
  if (auto it = doc.find("constraints"); it != doc.end()) {
    as_array(*it, "constraints");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = "constraints[" + std::to_string(i) + "]";
      const json& e = (*it)[i];
      check_object(e, at, {"id", "members"});
      p.constraints.push_back({as_string(member(e, at + ".", "id"), at + ".id"),
                               read_ids(member(e, at + ".", "members"), at + ".members")});
    }
  }
  p.depends = read_pairs(doc, "depends");
  p.derives = read_pairs(doc, "derives");

  if (auto it = doc.find("tradeoff"); it != doc.end()) {
    check_object(*it, "tradeoff", {"labels", "rows"});
    auto labels = read_ids(member(*it, "tradeoff.", "labels"), "tradeoff.labels");
    const json& rows = as_array(member(*it, "tradeoff.", "rows"), "tradeoff.rows");
    std::vector<std::vector<int>> matrix;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string at = "tradeoff.rows[" + std::to_string(i) + "]";
      as_array(rows[i], at);
      std::vector<int> row;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (!rows[i][j].is_number_integer()) {
          field_error(at + "[" + std::to_string(j) + "]", "expected an integer");
        }
        row.push_back(rows[i][j].get<int>());
      }
      matrix.push_back(std::move(row));
    }
    p.tradeoff = TradeoffMatrix(std::move(labels), std::move(matrix));
  }

  if (auto it = doc.find("raw_relevance"); it != doc.end()) {
    as_array(*it, "raw_relevance");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = "raw_relevance[" + std::to_string(i) + "]";
      const json& e = (*it)[i];
      check_object(e, at, {"a", "b", "sigma"});
      p.raw_relevance.push_back({as_string(member(e, at + ".", "a"), at + ".a"),
                                 as_string(member(e, at + ".", "b"), at + ".b"),
                                 as_number(member(e, at + ".", "sigma"), at + ".sigma")});
    }
  }

  if (auto it = doc.find("params"); it != doc.end()) out.params = params_from_json(*it);
  if (!check) return out;

  auto violations = validate(p);
  if (out.params) {
    for (auto& v : validate_params(*out.params)) violations.push_back("params: " + v);
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return out;
}

json model_to_json(const ModelDocument& model) {
  const auto& p = model.primitive;
  json out = json::object();
  out["name"] = p.name;
  json functional = json::array();
  json scenarios = json::array();
  for (const auto& r : p.requirements) {
    if (r.is_scenario()) {
      scenarios.push_back({{"id", r.id},
                           {"general_scenario", r.general_scenario.value_or("")},
                           {"description", r.description}});
    } else {
      functional.push_back({{"id", r.id}, {"description", r.description}});
    }
  }
  out["functional"] = std::move(functional);
  out["scenarios"] = std::move(scenarios);
  json constraints = json::array();
  for (const auto& c : p.constraints) {
    constraints.push_back({{"id", c.id}, {"members", c.members}});
  }
  out["constraints"] = std::move(constraints);
  out["depends"] = pairs_to_json(p.depends);
  out["derives"] = pairs_to_json(p.derives);
  out["tradeoff"] = {{"labels", p.tradeoff.labels()}, {"rows", p.tradeoff.rows()}};
  if (model.params) out["params"] = params_to_json(*model.params);
  json raw = json::array();
  for (const auto& e : p.raw_relevance) {
    raw.push_back({{"a", e.a}, {"b", e.b}, {"sigma", e.sigma}});
  }
  out["raw_relevance"] = std::move(raw);
  return out;
}

ModelDocument parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return model_from_json(doc);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ModelDocument load_model(const std::filesystem::path& path) {
  return parse_model(read_text_file(path));
}

std::string save_model(const ModelDocument& model) {
  return model_to_json(model).dump(2) + "\n";
}

Decomposition decomposition_from_json(const PrimitiveView& view, const json& doc) {
  const json* list = &doc;
  if (doc.is_object()) {
    auto it = doc.find("coalitions");
    if (it == doc.end()) field_error("coalitions", "missing");
    list = &*it;
  }
  as_array(*list, "coalitions");
  Decomposition out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const std::string at = "coalitions[" + std::to_string(i) + "]";
    const json& entry = (*list)[i];
    const json& ids_json = entry.is_object() ? member(entry, at + ".", "members") : entry;
    auto ids = read_ids(ids_json, at);
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < ids.size(); ++j) {
      auto r = view.find(ids[j]);
      if (!r) field_error(at + "[" + std::to_string(j) + "]", "unknown requirement '" + ids[j] + "'");
      members.push_back(*r);
    }
    Coalition c(members);
    if (c.size() != members.size()) field_error(at, "repeated requirement");
    out.push_back(std::move(c));
  }
  return out;
}

Decomposition parse_decomposition(const PrimitiveView& view, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return decomposition_from_json(view, doc);
}

json decomposition_to_json(const PrimitiveView& view, const Decomposition& decomposition) {
  json list = json::array();
  for (const auto& c : decomposition) list.push_back(view.ids(c));
  return {{"coalitions", std::move(list)}};
}

double report_number(double value) {
  const double scale = std::pow(10.0, kReportDecimals);
  double r = std::round(value * scale) / scale;
  return r == 0.0 ? 0.0 : r;
}

json report_to_json(const GameContext& ctx, const SolveReport& report, bool with_stats) {
  json out = json::object();
  out["model"] = ctx.primitive().name;
  out["mode"] = report.mode.is_exact() ? "exact" : "k-cohesive";
  if (!report.mode.is_exact()) out["k"] = report.mode.k();
  out["params"] = params_to_json(ctx.params());
  json coalitions = json::array();
  double total = 0.0;
  for (std::size_t i : payoff_order(report.utilities)) {
    coalitions.push_back({{"members", listing_order(ctx.view(), report.decomposition[i])},
                          {"size", report.decomposition[i].size()},
                          {"utility", report_number(report.utilities[i])}});
    total += report.utilities[i];
  }
  out["coalitions"] = std::move(coalitions);
  out["total_utility"] = report_number(total);
  if (with_stats) {
    json trace = json::array();
    for (double v : report.stats.merge_trace) trace.push_back(report_number(v));
    out["stats"] = {{"subsets_enumerated", report.stats.subsets_enumerated},
                    {"merges", report.stats.merges},
                    {"wall_ms", report.stats.wall_ms},
                    {"merge_trace", std::move(trace)}};
  }
  return out;
}

std::string save_report(const GameContext& ctx, const SolveReport& report, bool with_stats) {
  return report_to_json(ctx, report, with_stats).dump(2) + "\n";
}

SolveReport report_from_json(const GameContext& ctx, const json& doc) {
  check_object(doc, "report",
               {"model", "mode", "k", "params", "coalitions", "total_utility", "stats"});
  SolveReport out;
  const std::string mode = as_string(member(doc, "report.", "mode"), "report.mode");
  if (mode == "exact") {
    out.mode = SolveMode::exact();
  } else if (mode == "k-cohesive") {
    const json& k = member(doc, "report.", "k");
    if (!k.is_number_integer() || k.get<int>() < 1) {
      field_error("report.k", "expected a positive integer");
    }
    out.mode = SolveMode::k_cohesive(k.get<int>());
  } else {
    field_error("report.mode", "expected \"exact\" or \"k-cohesive\"");
  }
  out.decomposition = decomposition_from_json(ctx.view(), doc);
  for (const auto& c : out.decomposition) out.utilities.push_back(coalition_utility(ctx, c));
  if (auto it = doc.find("stats"); it != doc.end() && it->is_object()) {
    out.stats.subsets_enumerated = it->value("subsets_enumerated", std::uint64_t{0});
    out.stats.merges = it->value("merges", std::size_t{0});
    out.stats.wall_ms = it->value("wall_ms", 0.0);
    out.stats.merge_trace = it->value("merge_trace", std::vector<double>{});
  }
  return out;
}

SolveReport payoff_ordered(const SolveReport& report) {
  SolveReport out = report;
  out.decomposition.clear();
  out.utilities.clear();
  for (std::size_t i : payoff_order(report.utilities)) {
    out.decomposition.push_back(report.decomposition[i]);
    out.utilities.push_back(report.utilities[i]);
  }
  return out;
}

std::string report_table(const GameContext& ctx, const SolveReport& report) {
  const auto order = payoff_order(report.utilities);
  std::vector<std::string> names;
  std::vector<std::string> values;
  std::size_t name_w = std::string("Coalition").size();
  std::size_t value_w = std::string("Utility").size();
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    names.push_back("Coalition " + std::to_string(rank));
    values.push_back(format_number(report.utilities[order[rank]]));
    name_w = std::max(name_w, names.back().size());
    value_w = std::max(value_w, values.back().size());
  }

  std::ostringstream out;
  out << report.mode.name() << " solution of '" << ctx.primitive().name << "': "
      << order.size() << (order.size() == 1 ? " coalition" : " coalitions")
      << ", ordered by payoff\n\n";
  out << std::left << std::setw(static_cast<int>(name_w)) << "Coalition" << "  "
      << std::right << std::setw(static_cast<int>(value_w)) << "Utility" << "  Members\n";
  double total = 0.0;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const auto& c = report.decomposition[order[rank]];
    out << std::left << std::setw(static_cast<int>(name_w)) << names[rank] << "  "
        << std::right << std::setw(static_cast<int>(value_w)) << values[rank] << "  "
        << join(listing_order(ctx.view(), c), " ") << "\n";
    total += report.utilities[order[rank]];
  }
  out << "\nTotal utility: " << format_number(total) << "\n";
  return out.str();
}

json verification_to_json(const GameContext& ctx, const VerificationReport& report) {
  const auto& view = ctx.view();
  json out = json::object();
  out["mode"] = report.mode.is_exact() ? "exact" : "k-cohesive";
  if (!report.mode.is_exact()) out["k"] = report.mode.k();
  out["passed"] = report.passed();
  out["structural"] = report.structural;
  json utilities = json::array();
  for (double u : report.utilities) utilities.push_back(report_number(u));
  out["utilities"] = std::move(utilities);
  json cohesion = json::array();
  for (const auto& f : report.cohesion_failures) {
    cohesion.push_back({{"coalition", f.coalition},
                        {"witness", view.ids(f.witness)},
                        {"witness_utility", report_number(f.witness_utility)}});
  }
  out["cohesion_failures"] = std::move(cohesion);
  json expansion = json::array();
  for (const auto& f : report.expansion_failures) {
    expansion.push_back({{"first", f.first},
                         {"second", f.second},
                         {"union_utility", report_number(f.union_utility)}});
  }
  out["expansion_failures"] = std::move(expansion);
  return out;
}

std::string verification_text(const GameContext& ctx, const VerificationReport& report) {
  const auto& view = ctx.view();
  std::ostringstream out;
  const std::string what = report.mode.is_exact()
                               ? "solution"
                               : std::to_string(report.mode.k()) + "-cohesive solution";
  if (report.passed()) {
    out << "verified: decomposition is a " << what << "\n";
    return out.str();
  }
  out << "not a " << what << ":\n";
  for (const auto& s : report.structural) out << "  structure: " << s << "\n";
  for (const auto& f : report.cohesion_failures) {
    out << "  coalition " << f.coalition << " (utility "
        << format_number(report.utilities[f.coalition]) << ") is not cohesive: {"
        << join(view.ids(f.witness), ", ") << "} has utility "
        << format_number(f.witness_utility) << "\n";
  }
  for (const auto& f : report.expansion_failures) {
    out << "  coalitions " << f.first << " and " << f.second
        << " are worth more together: " << format_number(f.union_utility) << " > "
        << format_number(std::max(report.utilities[f.first], report.utilities[f.second]))
        << "\n";
  }
  return out.str();
}

std::string export_dot(const GameContext& ctx, const Decomposition* clusters) {
  const auto& view = ctx.view();
  const Coalition all = view.all();
  std::ostringstream out;
  out << "graph " << dot_quote(ctx.primitive().name) << " {\n";
  out << "  node [fontname=\"Helvetica\"];\n";

  std::vector<char> placed(view.size(), 0);
  if (clusters) {
    for (std::size_t i = 0; i < clusters->size(); ++i) {
      const auto& c = (*clusters)[i];
      out << "  subgraph cluster_" << i << " {\n";
      out << "    label=" << dot_quote("Coalition " + std::to_string(i) + " (" +
                                       format_number(coalition_utility(ctx, c)) + ")")
          << ";\n";
      for (std::size_t r : c) {
        if (r >= view.size()) throw DomainError("cluster member out of range");
        out << "    " << dot_quote(view.id(r))
            << (view.is_scenario(r) ? " [shape=ellipse];\n" : " [shape=box];\n");
        placed[r] = 1;
      }
      out << "  }\n";
    }
  }
  for (std::size_t r = 0; r < view.size(); ++r) {
    if (placed[r]) continue;
    out << "  " << dot_quote(view.id(r))
        << (view.is_scenario(r) ? " [shape=ellipse];\n" : " [shape=box];\n");
  }
  for (std::size_t a = 0; a < view.size(); ++a) {
    for (std::size_t b = a + 1; b < view.size(); ++b) {
      const double v = pair_interaction(ctx, a, b, all);
      if (utility_equal(v, 0.0)) continue;
      const std::string w = format_number(v);
      out << "  " << dot_quote(view.id(a)) << " -- " << dot_quote(view.id(b))
          << " [color=" << (v > 0 ? "blue" : "red") << ", label=" << dot_quote(w)
          << ", weight=" << dot_quote(w) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

json interaction_graph_json(const GameContext& ctx) {
  const auto& view = ctx.view();
  const Coalition all = view.all();
  json nodes = json::array();
  for (std::size_t r = 0; r < view.size(); ++r) {
    json n = {{"id", view.id(r)}, {"kind", view.is_scenario(r) ? "scenario" : "functional"}};
    if (view.is_scenario(r)) n["general_scenario"] = *view.requirement(r).general_scenario;
    nodes.push_back(std::move(n));
  }
  json edges = json::array();
  for (std::size_t a = 0; a < view.size(); ++a) {
    for (std::size_t b = a + 1; b < view.size(); ++b) {
      const double v = pair_interaction(ctx, a, b, all);
      if (utility_equal(v, 0.0)) continue;
      edges.push_back({{"a", view.id(a)},
                       {"b", view.id(b)},
                       {"sigma", report_number(ctx.sigma(a, b))},
                       {"interaction", report_number(v)},
                       {"color", v > 0 ? "blue" : "red"}});
    }
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

}  // namespace adgame
