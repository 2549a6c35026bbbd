// Copyright 2026 The roughspan Authors
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
//
// Command line front end. Exit codes: 0 success, 1 domain error (with a
// machine readable JSON object on stderr), 2 usage error.

#ifndef ROUGHSPAN_TOOLS_CLI_HPP_
#define ROUGHSPAN_TOOLS_CLI_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "roughspan/roughspan.hpp"

namespace roughspan::cli {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string item = comma == std::string::npos
                           ? text.substr(start)
                           : text.substr(start, comma - start);
    // trim
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) items.push_back(item.substr(b, e - b + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

inline std::string fmt4(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << value;
  return out.str();
}

inline std::string braces(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  out += "}";
  return out;
}

inline SpanMeasure parse_measure(const std::string& name) {
  if (name == "delta") return SpanMeasure::delta;
  if (name == "delta-prime") return SpanMeasure::delta_prime;
  if (name == "complete") return SpanMeasure::complete;
  if (name == "hybrid") return SpanMeasure::hybrid;
  raise(Errc::invalid_config, "unknown measure '" + name + "'");
}

inline ValidationMode parse_validation(const std::string& name) {
  if (name == "strict") return ValidationMode::strict;
  if (name == "warn") return ValidationMode::warn;
  if (name == "off") return ValidationMode::off;
  raise(Errc::invalid_config, "unknown validation mode '" + name + "'");
}

inline InformationSystem load_table(const std::string& path) {
  return parse_information_table(load_file(path));
}

inline AttributeSubset attrs_or_all(const InformationSystem& sys,
                                    const std::optional<std::string>& attrs) {
  if (!attrs) return AttributeSubset::of(sys, sys.attributes());
  return AttributeSubset::of(sys, split_list(*attrs));
}

inline ordered_json violations_json(const FuzzyRelation& rel,
                                    const ValidationReport& report) {
  ordered_json list = ordered_json::array();
  for (const auto& v : report.violations) {
    ordered_json item;
    item["axiom"] = axiom_name(v.axiom);
    if (v.axiom == RelationAxiom::reflexivity) {
      item["objects"] = {rel.universe()[v.x]};
    } else if (v.axiom == RelationAxiom::symmetry) {
      item["objects"] = {rel.universe()[v.x], rel.universe()[v.y]};
    } else {
      item["objects"] = {rel.universe()[v.x], rel.universe()[v.y],
                         rel.universe()[v.z]};
    }
    item["magnitude"] = v.magnitude;
    list.push_back(item);
  }
  return list;
}

}  // namespace detail

struct CommandContext {
  bool json = false;
  std::ostream* out = nullptr;
};

inline void emit(const CommandContext& ctx, const ordered_json& machine,
                 const std::string& text) {
  if (ctx.json) {
    *ctx.out << machine.dump(2) << "\n";
  } else {
    *ctx.out << text;
  }
}

// --- approx ---------------------------------------------------------------

inline int cmd_approx(const CommandContext& ctx, const std::string& table,
                      const std::string& set,
                      const std::optional<std::string>& attrs) {
  auto sys = detail::load_table(table);
  auto p = detail::attrs_or_all(sys, attrs);
  auto x = ObjectSubset::of(sys, detail::split_list(set));
  auto triple = approximate(sys, p, x);

  ordered_json j;
  j["command"] = "approx";
  j["attributes"] = p.names;
  j["set"] = x.ids;
  j["lower"] = triple.lower.ids;
  j["upper"] = triple.upper.ids;
  j["boundary"] = triple.boundary.ids;
  std::ostringstream text;
  text << "lower    = " << detail::braces(triple.lower.ids) << "\n"
       << "upper    = " << detail::braces(triple.upper.ids) << "\n"
       << "boundary = " << detail::braces(triple.boundary.ids) << "\n";
  if (!x.empty()) {
    double acc = static_cast<double>(triple.lower.size()) /
                 static_cast<double>(triple.upper.size());
    j["accuracy"] = acc;
    j["roughness"] = 1.0 - acc;
    text << "accuracy = " << detail::fmt4(acc)
         << ", roughness = " << detail::fmt4(1.0 - acc) << "\n";
  } else {
    j["accuracy"] = nullptr;
    j["roughness"] = nullptr;
  }
  emit(ctx, j, text.str());
  return 0;
}

// --- span -------------------------------------------------------------------

inline int cmd_span(const CommandContext& ctx, const std::string& table,
                    const std::string& set,
                    const std::optional<std::string>& attrs,
                    const std::string& measure, double w1) {
  auto sys = detail::load_table(table);
  auto p = detail::attrs_or_all(sys, attrs);
  auto x = ObjectSubset::of(sys, detail::split_list(set));
  auto w = SpanWeights::from_w1(w1);
  SpanMeasure m = detail::parse_measure(measure);

  SpanValue value;
  switch (m) {
    case SpanMeasure::delta: value = span_delta(sys, p, x, w); break;
    case SpanMeasure::delta_prime:
      value = span_delta_prime(sys, p, x, w);
      break;
    case SpanMeasure::complete: value = complete_span(sys, p, x, w); break;
    case SpanMeasure::hybrid: value = hybrid_span(sys, p, x, w); break;
    case SpanMeasure::fuzzy: break;  // unreachable, parse_measure rejects
  }

  ordered_json j;
  j["command"] = "span";
  j["measure"] = measure_name(m);
  j["w1"] = w.w1();
  j["w2"] = w.w2();
  j["attributes"] = p.names;
  j["set"] = x.ids;
  j["value"] = value.value;
  emit(ctx, j,
       "span(" + std::string(measure_name(m)) + ", w1=" + detail::fmt4(w.w1()) +
           ") = " + detail::fmt4(value.value) + "\n");
  return 0;
}

// --- spanning-set -----------------------------------------------------------

inline int cmd_spanning_set(const CommandContext& ctx, const std::string& table,
                            const std::optional<std::string>& attrs,
                            const std::string& measure, double w1,
                            const std::string& solver,
                            std::optional<std::size_t> max_size,
                            const std::optional<std::string>& seed,
                            std::size_t max_iters) {
  auto sys = detail::load_table(table);
  auto p = detail::attrs_or_all(sys, attrs);

  SolverConfig config;
  config.measure = detail::parse_measure(measure);
  config.weights = SpanWeights::from_w1(w1);
  config.max_size = max_size;

  SpanningSetResult result;
  if (solver == "exhaustive") {
    config.strategy = SolverStrategy::exhaustive;
    result = solve_exhaustive(sys, p, config);
  } else if (solver == "greedy") {
    config.strategy = SolverStrategy::greedy;
    result = solve_greedy(sys, p, config);
  } else if (solver == "local") {
    config.strategy = SolverStrategy::local;
    auto start = seed ? ObjectSubset::of(sys, detail::split_list(*seed))
                      : ObjectSubset{};
    result = solve_local(sys, p, config, start, max_iters);
  } else {
    raise(Errc::invalid_config, "unknown solver '" + solver + "'");
  }

  ordered_json j;
  j["command"] = "spanning-set";
  j["strategy"] = strategy_name(result.strategy);
  j["measure"] = measure_name(config.measure);
  j["w1"] = config.weights.w1();
  j["w2"] = config.weights.w2();
  if (max_size) {
    j["max_size"] = *max_size;
  } else {
    j["max_size"] = nullptr;
  }
  j["subset"] = result.subset.ids;
  j["span"] = result.span.value;
  j["optimal"] = result.optimal;
  std::ostringstream text;
  text << "spanning set (" << strategy_name(result.strategy) << ", "
       << measure_name(config.measure) << ", w1=" << detail::fmt4(w1)
       << "): " << detail::braces(result.subset.ids) << "\n"
       << "span = " << detail::fmt4(result.span.value)
       << (result.optimal ? " (global optimum)" : " (heuristic)") << "\n";
  emit(ctx, j, text.str());
  return 0;
}

// --- fuzzy-approx -----------------------------------------------------------

inline int cmd_fuzzy_approx(const CommandContext& ctx,
                            const std::optional<std::string>& relation,
                            const std::optional<std::string>& concept_file,
                            const std::optional<std::string>& partition_file,
                            const std::string& set_file, const std::string& def,
                            const std::string& validate) {
  auto f = parse_fuzzy_set(load_file(set_file));
  ValidationMode mode = detail::parse_validation(validate);

  ordered_json j;
  j["command"] = "fuzzy-approx";
  j["def"] = def;
  std::ostringstream text;

  FuzzyApproximationPair pair{FuzzySet::constant(f.universe(), 0.0),
                              FuzzySet::constant(f.universe(), 0.0)};
  if (def == "I") {
    if (!relation) {
      raise(Errc::invalid_config, "--def I requires --relation");
    }
    auto rel = parse_fuzzy_relation(load_file(*relation));
    auto report = validate_relation(rel, mode);
    ordered_json validation;
    validation["mode"] = validate;
    validation["valid"] = report.valid();
    validation["violations"] = detail::violations_json(rel, report);
    j["validation"] = validation;
    if (!report.valid()) {
      text << "warning: relation violates " << report.violations.size()
           << " axiom instance(s)\n";
    }
    pair = fuzzy_approximate(rel, f);
  } else if (def == "II") {
    if (!concept_file) {
      raise(Errc::invalid_config, "--def II requires --concept");
    }
    auto g = parse_fuzzy_set(load_file(*concept_file));
    pair = fuzzy_approximate(g, f);
  } else if (def == "III") {
    if (!partition_file) {
      raise(Errc::missing_partition, "--def III requires --partition");
    }
    auto part = parse_fuzzy_partition(load_file(*partition_file));
    pair = fuzzy_approximate(part, f);
  } else {
    raise(Errc::invalid_config, "unknown operator definition '" + def + "'");
  }

  j["universe"] = pair.lower.universe();
  j["lower"] = pair.lower.membership();
  j["upper"] = pair.upper.membership();
  text << "object: lower / upper\n";
  for (std::size_t i = 0; i < pair.lower.size(); ++i) {
    text << "  " << pair.lower.universe()[i] << ": "
         << detail::fmt4(pair.lower.grade(i)) << " / "
         << detail::fmt4(pair.upper.grade(i)) << "\n";
  }
  emit(ctx, j, text.str());
  return 0;
}

// --- fuzzy-span ---------------------------------------------------------------

inline int cmd_fuzzy_span(const CommandContext& ctx,
                          const std::optional<std::string>& lower_file,
                          const std::optional<std::string>& upper_file,
                          const std::optional<std::string>& relation,
                          const std::optional<std::string>& partition_file,
                          const std::optional<std::string>& set_file,
                          const std::string& def, double w1,
                          const std::string& validate) {
  auto w = SpanWeights::from_w1(w1);

  FuzzySet lower = FuzzySet::constant({"_"}, 0.0);
  FuzzySet upper = lower;
  if (lower_file && upper_file) {
    lower = parse_fuzzy_set(load_file(*lower_file));
    upper = parse_fuzzy_set(load_file(*upper_file));
  } else if (set_file) {
    auto f = parse_fuzzy_set(load_file(*set_file));
    if (def == "I") {
      if (!relation) {
        raise(Errc::invalid_config, "--def I requires --relation");
      }
      auto rel = parse_fuzzy_relation(load_file(*relation));
      validate_relation(rel, detail::parse_validation(validate));
      auto pair = fuzzy_approximate(rel, f);
      lower = pair.lower;
      upper = pair.upper;
    } else if (def == "III") {
      if (!partition_file) {
        raise(Errc::missing_partition, "--def III requires --partition");
      }
      auto part = parse_fuzzy_partition(load_file(*partition_file));
      auto pair = fuzzy_approximate(part, f);
      lower = pair.lower;
      upper = pair.upper;
    } else {
      raise(Errc::invalid_config,
            "fuzzy-span supports --def I or --def III with --set");
    }
  } else {
    raise(Errc::invalid_config,
          "fuzzy-span needs either --lower and --upper, or --relation/"
          "--partition and --set");
  }

  auto value = fuzzy_span(lower, upper, w);
  ordered_json j;
  j["command"] = "fuzzy-span";
  j["w1"] = w.w1();
  j["w2"] = w.w2();
  j["lower_sigma"] = sigma_count(lower);
  j["upper_sigma"] = sigma_count(upper);
  j["value"] = value.value;
  emit(ctx, j,
       "fuzzy span (w1=" + detail::fmt4(w.w1()) +
           ") = " + detail::fmt4(value.value) + "\n");
  return 0;
}

// --- select -------------------------------------------------------------------

inline int cmd_select(const CommandContext& ctx, const std::string& table,
                      double w1, std::optional<std::size_t> max_features) {
  auto sys = detail::load_table(table);
  auto result = select_features(sys, SpanWeights::from_w1(w1), max_features);

  ordered_json j;
  j["command"] = "select";
  j["criterion"] = SelectionResult::criterion;
  j["w1"] = w1;
  j["selected"] = result.selected.names;
  ordered_json trace = ordered_json::array();
  std::ostringstream text;
  text << "selected = " << detail::braces(result.selected.names) << "\n";
  for (const auto& step : result.trace) {
    ordered_json item;
    item["attribute"] = step.attribute;
    item["criterion"] = step.criterion;
    item["mean_accuracy"] = step.mean_accuracy;
    trace.push_back(item);
    text << "  + " << step.attribute
         << "  criterion=" << detail::fmt4(step.criterion)
         << "  mean_accuracy=" << detail::fmt4(step.mean_accuracy) << "\n";
  }
  j["trace"] = trace;
  emit(ctx, j, text.str());
  return 0;
}

// --- repro-table1 ---------------------------------------------------------------

inline int cmd_repro_table1(const CommandContext& ctx) {
  const auto& rows = sentences::reference_table();
  const double tol = sentences::kReferenceTolerance;

  ordered_json cells = ordered_json::array();
  std::ostringstream text;
  text << "w1    sentence  computed  reference  status\n";
  int matched = 0;
  int errata = 0;
  bool all_ok = true;
  for (const auto& row : rows) {
    auto w = SpanWeights::from_w1(row.w1);
    const double computed[2] = {
        fuzzy_span(sentences::sentence1_lower(), sentences::sentence1_upper(),
                   w)
            .value,
        fuzzy_span(sentences::sentence2_lower(), sentences::sentence2_upper(),
                   w)
            .value};
    const double printed[2] = {row.printed_s1, row.printed_s2};
    const double expected[2] = {row.expected_s1, row.expected_s2};
    for (int s = 0; s < 2; ++s) {
      const bool ok = std::fabs(computed[s] - expected[s]) <= tol;
      all_ok = all_ok && ok;
      ordered_json cell;
      cell["w1"] = row.w1;
      cell["sentence"] = s + 1;
      cell["computed"] = computed[s];
      cell["reference"] = printed[s];
      std::string status;
      if (row.erratum) {
        cell["recomputed"] = expected[s];
        status = ok ? "erratum" : "FAIL";
        errata += ok ? 1 : 0;
      } else {
        status = ok ? "ok" : "FAIL";
        matched += ok ? 1 : 0;
      }
      cell["status"] = status;
      cells.push_back(cell);
      text << detail::fmt4(row.w1).substr(0, 4) << "  " << (s + 1)
           << "         " << detail::fmt4(computed[s]) << "    "
           << detail::fmt4(printed[s]) << "     " << status;
      if (row.erratum) {
        text << " (reference repeats the w1=0.2 row; recomputed "
             << detail::fmt4(expected[s]) << ")";
      }
      text << "\n";
    }
  }
  ordered_json j;
  j["command"] = "repro-table1";
  j["tolerance"] = tol;
  j["cells"] = cells;
  j["matched"] = matched;
  j["errata"] = errata;
  j["all_ok"] = all_ok;
  text << (all_ok ? "all cells reproduced" : "some cells FAILED") << " ("
       << matched << " matched, " << errata << " errata recomputed)\n";
  emit(ctx, j, text.str());
  return all_ok ? 0 : 1;
}

// --- driver -------------------------------------------------------------------

inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"rough-set span measures, spanning sets, and span-guided "
               "feature selection"};
  app.require_subcommand(1);
  CommandContext ctx;
  ctx.out = &out;
  app.add_flag("--json", ctx.json, "machine readable JSON output");

  std::function<int()> action;

  // approx
  {
    auto* sub = app.add_subcommand(
        "approx", "lower/upper/boundary approximation of an object subset");
    auto table = std::make_shared<std::string>();
    auto set = std::make_shared<std::string>();
    auto attrs = std::make_shared<std::string>();
    sub->add_option("--table", *table, "information table CSV")->required();
    sub->add_option("--set", *set, "comma separated object ids")->required();
    auto* attrs_opt =
        sub->add_option("--attrs", *attrs, "comma separated attribute names");
    sub->callback([&action, &ctx, table, set, attrs, attrs_opt]() {
      action = [&ctx, table, set, attrs, attrs_opt]() {
        return cmd_approx(ctx, *table, *set,
                          attrs_opt->count() ? std::optional(*attrs)
                                             : std::nullopt);
      };
    });
  }

  // span
  {
    auto* sub = app.add_subcommand("span", "span of an object subset");
    auto table = std::make_shared<std::string>();
    auto set = std::make_shared<std::string>();
    auto attrs = std::make_shared<std::string>();
    auto measure = std::make_shared<std::string>("delta-prime");
    auto w1 = std::make_shared<double>(0.5);
    sub->add_option("--table", *table, "information table CSV")->required();
    sub->add_option("--set", *set, "comma separated object ids")->required();
    auto* attrs_opt =
        sub->add_option("--attrs", *attrs, "comma separated attribute names");
    sub->add_option("--measure", *measure,
                    "delta|delta-prime|complete|hybrid")
        ->check(CLI::IsMember({"delta", "delta-prime", "complete", "hybrid"}));
    sub->add_option("--w1", *w1, "lower-approximation weight in [0,1]");
    sub->callback([&action, &ctx, table, set, attrs, attrs_opt, measure,
                   w1]() {
      action = [&ctx, table, set, attrs, attrs_opt, measure, w1]() {
        return cmd_span(ctx, *table, *set,
                        attrs_opt->count() ? std::optional(*attrs)
                                           : std::nullopt,
                        *measure, *w1);
      };
    });
  }

  // spanning-set
  {
    auto* sub = app.add_subcommand("spanning-set",
                                   "search for a span maximizing subset");
    auto table = std::make_shared<std::string>();
    auto attrs = std::make_shared<std::string>();
    auto measure = std::make_shared<std::string>("delta-prime");
    auto w1 = std::make_shared<double>(0.5);
    auto solver = std::make_shared<std::string>("exhaustive");
    auto max_size = std::make_shared<std::size_t>(0);
    auto seed = std::make_shared<std::string>();
    auto max_iters = std::make_shared<std::size_t>(1000);
    sub->add_option("--table", *table, "information table CSV")->required();
    auto* attrs_opt =
        sub->add_option("--attrs", *attrs, "comma separated attribute names");
    sub->add_option("--measure", *measure,
                    "delta|delta-prime|complete|hybrid")
        ->check(CLI::IsMember({"delta", "delta-prime", "complete", "hybrid"}));
    sub->add_option("--w1", *w1, "lower-approximation weight in [0,1]");
    sub->add_option("--solver", *solver, "exhaustive|greedy|local")
        ->check(CLI::IsMember({"exhaustive", "greedy", "local"}));
    auto* max_size_opt =
        sub->add_option("--max-size", *max_size, "cardinality bound");
    auto* seed_opt = sub->add_option(
        "--seed", *seed, "starting subset for the local solver (object ids)");
    sub->add_option("--max-iters", *max_iters,
                    "iteration cap for the local solver");
    sub->callback([&action, &ctx, table, attrs, attrs_opt, measure, w1, solver,
                   max_size, max_size_opt, seed, seed_opt, max_iters]() {
      action = [&ctx, table, attrs, attrs_opt, measure, w1, solver, max_size,
                max_size_opt, seed, seed_opt, max_iters]() {
        return cmd_spanning_set(
            ctx, *table,
            attrs_opt->count() ? std::optional(*attrs) : std::nullopt,
            *measure, *w1, *solver,
            max_size_opt->count() ? std::optional(*max_size) : std::nullopt,
            seed_opt->count() ? std::optional(*seed) : std::nullopt,
            *max_iters);
      };
    });
  }

  // fuzzy-approx
  {
    auto* sub = app.add_subcommand(
        "fuzzy-approx", "fuzzy lower/upper approximations of a fuzzy set");
    auto relation = std::make_shared<std::string>();
    auto concept_file = std::make_shared<std::string>();
    auto partition = std::make_shared<std::string>();
    auto set = std::make_shared<std::string>();
    auto def = std::make_shared<std::string>("I");
    auto validate = std::make_shared<std::string>("warn");
    auto* rel_opt =
        sub->add_option("--relation", *relation, "fuzzy relation CSV");
    auto* concept_opt = sub->add_option("--concept", *concept_file,
                                        "concept fuzzy set CSV (--def II)");
    auto* part_opt = sub->add_option("--partition", *partition,
                                     "fuzzy partition CSV (--def III)");
    sub->add_option("--set", *set, "fuzzy set CSV")->required();
    sub->add_option("--def", *def, "operator family: I|II|III")
        ->check(CLI::IsMember({"I", "II", "III"}));
    sub->add_option("--validate", *validate, "strict|warn|off")
        ->check(CLI::IsMember({"strict", "warn", "off"}));
    sub->callback([&action, &ctx, relation, rel_opt, concept_file, concept_opt,
                   partition, part_opt, set, def, validate]() {
      action = [&ctx, relation, rel_opt, concept_file, concept_opt, partition,
                part_opt, set, def, validate]() {
        return cmd_fuzzy_approx(
            ctx, rel_opt->count() ? std::optional(*relation) : std::nullopt,
            concept_opt->count() ? std::optional(*concept_file) : std::nullopt,
            part_opt->count() ? std::optional(*partition) : std::nullopt, *set,
            *def, *validate);
      };
    });
  }

  // fuzzy-span
  {
    auto* sub = app.add_subcommand(
        "fuzzy-span", "span of a fuzzy rough set via sigma counts");
    auto lower = std::make_shared<std::string>();
    auto upper = std::make_shared<std::string>();
    auto relation = std::make_shared<std::string>();
    auto partition = std::make_shared<std::string>();
    auto set = std::make_shared<std::string>();
    auto def = std::make_shared<std::string>("I");
    auto w1 = std::make_shared<double>(0.5);
    auto validate = std::make_shared<std::string>("warn");
    auto* lower_opt =
        sub->add_option("--lower", *lower, "lower approximation CSV");
    auto* upper_opt =
        sub->add_option("--upper", *upper, "upper approximation CSV");
    auto* rel_opt =
        sub->add_option("--relation", *relation, "fuzzy relation CSV");
    auto* part_opt = sub->add_option("--partition", *partition,
                                     "fuzzy partition CSV (--def III)");
    auto* set_opt = sub->add_option("--set", *set, "fuzzy set CSV");
    sub->add_option("--def", *def, "operator family: I|III")
        ->check(CLI::IsMember({"I", "II", "III"}));
    sub->add_option("--w1", *w1, "lower-approximation weight in [0,1]");
    sub->add_option("--validate", *validate, "strict|warn|off")
        ->check(CLI::IsMember({"strict", "warn", "off"}));
    sub->callback([&action, &ctx, lower, lower_opt, upper, upper_opt, relation,
                   rel_opt, partition, part_opt, set, set_opt, def, w1,
                   validate]() {
      action = [&ctx, lower, lower_opt, upper, upper_opt, relation, rel_opt,
                partition, part_opt, set, set_opt, def, w1, validate]() {
        return cmd_fuzzy_span(
            ctx, lower_opt->count() ? std::optional(*lower) : std::nullopt,
            upper_opt->count() ? std::optional(*upper) : std::nullopt,
            rel_opt->count() ? std::optional(*relation) : std::nullopt,
            part_opt->count() ? std::optional(*partition) : std::nullopt,
            set_opt->count() ? std::optional(*set) : std::nullopt, *def, *w1,
            *validate);
      };
    });
  }

  // select
  {
    auto* sub = app.add_subcommand(
        "select", "greedy span-guided feature selection on a decision table");
    auto table = std::make_shared<std::string>();
    auto w1 = std::make_shared<double>(0.8);
    auto max_features = std::make_shared<std::size_t>(0);
    sub->add_option("--table", *table, "decision table CSV (#decision column)")
        ->required();
    sub->add_option("--w1", *w1, "lower-approximation weight in [0,1]");
    auto* max_opt = sub->add_option("--max-features", *max_features,
                                    "cap on selected attributes");
    sub->callback([&action, &ctx, table, w1, max_features, max_opt]() {
      action = [&ctx, table, w1, max_features, max_opt]() {
        return cmd_select(ctx, *table, *w1,
                          max_opt->count() ? std::optional(*max_features)
                                           : std::nullopt);
      };
    });
  }

  // repro-table1
  {
    auto* sub = app.add_subcommand(
        "repro-table1",
        "recompute the bundled sentence example against its reference grid");
    sub->callback([&action, &ctx]() {
      action = [&ctx]() { return cmd_repro_table1(ctx); };
    });
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    ordered_json j;
    j["error"]["code"] = e.code_name();
    j["error"]["message"] = e.what();
    err << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    ordered_json j;
    j["error"]["code"] = "InternalError";
    j["error"]["message"] = e.what();
    err << j.dump() << "\n";
    return 1;
  }
}

}  // namespace roughspan::cli

#endif  // ROUGHSPAN_TOOLS_CLI_HPP_
