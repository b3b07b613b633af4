/* Copyright 2026 The alexinv Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "alexinv/checks.hpp"
#include "alexinv/errors.hpp"
#include "alexinv/fox.hpp"
#include "alexinv/magnus.hpp"
#include "alexinv/mapclass.hpp"
#include "alexinv/symrep.hpp"
#include "alexinv/words.hpp"

namespace {

using alexinv::Budget;
using alexinv::Config;
using json = nlohmann::ordered_json;

struct Common {
  bool as_json = false;
  bool force = false;
  std::optional<std::string> config_path;
};

Config load_config(const Common& common) {
  Config config;
  if (common.config_path)
    config = alexinv::parse_config_file(*common.config_path);
  if (common.force) config.allow_out_of_budget = true;
  return config;
}

json report_envelope(const std::string& operation, std::optional<int> g,
                     std::optional<int> n, std::optional<int> trunc,
                     std::optional<int> budget) {
  json out;
  out["operation"] = operation;
  out["genus"] = g ? json(*g) : json(nullptr);
  out["degree"] = n ? json(*n) : json(nullptr);
  out["truncation"] = trunc ? json(*trunc) : json(nullptr);
  out["budget"] = budget ? json(*budget) : json(nullptr);
  return out;
}

void emit(const json& out, bool as_json) {
  if (as_json) {
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << out["operation"].get<std::string>();
  if (!out["genus"].is_null()) std::cout << " g=" << out["genus"];
  if (!out["degree"].is_null()) std::cout << " n=" << out["degree"];
  if (!out["truncation"].is_null()) std::cout << " m=" << out["truncation"];
  std::cout << ": " << out["value"].dump();
  if (out.contains("stable") && !out["stable"].is_null())
    std::cout << (out["stable"].get<bool>() ? " (stable)" : " (UNSTABLE)");
  std::cout << "\n";
  if (out.contains("notes") && out["notes"].is_string() &&
      !out["notes"].get<std::string>().empty())
    std::cout << "  note: " << out["notes"].get<std::string>() << "\n";
}

int parse_twist_handles(const std::string& spec) {
  // twist:c<h>
  const std::string prefix = "twist:c";
  if (spec.rfind(prefix, 0) != 0)
    throw std::invalid_argument("endomorphism spec must look like twist:c1");
  return std::stoi(spec.substr(prefix.size()));
}

void check_budget(const Config& config, std::optional<int> g,
                  std::optional<int> n, std::optional<int> m,
                  std::optional<int> k, json& out) {
  Budget budget;
  bool over = alexinv::enforce_budget(budget, g, n, m, k,
                                      config.allow_out_of_budget);
  if (over) out["out_of_budget"] = true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "alexinv: exact computations in the rational Alexander invariant of a "
      "surface group (Fox calculus, J-adic gradings, symplectic "
      "decompositions, Magnus expansions, Johnson filtration)"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_flag("--json", common.as_json, "emit JSON instead of plain text");
  app.add_flag("--force", common.force,
               "run out-of-budget parameters (reports are marked)");
  app.add_option("--config", common.config_path,
                 "key-value config file (genus list, caps, seeds)");

  int g = 2;
  int n = 0;
  int max_n = 3;
  int probe_max_n = 2;
  std::optional<int> trunc;
  int budget_k = 4;
  int max_degree = 5;
  std::string word_text;
  std::string scale_text;
  std::string lambda_text;
  std::string endo_spec = "twist:c1";
  bool timings = false;

  int exit_code = 0;

  auto* fox_relator = app.add_subcommand(
      "fox-relator", "Fox derivative row of the surface relator");
  fox_relator->add_option("--g", g, "genus")->required();
  fox_relator->callback([&] {
    Config config = load_config(common);
    json out = report_envelope("fox-relator", g, {}, {}, {});
    check_budget(config, g, {}, {}, {}, out);
    bool ok = alexinv::fox_vector(alexinv::surface_relator(g)) ==
              alexinv::theta_relator(g);
    out["value"] = ok ? "match" : "mismatch";
    out["stable"] = nullptr;
    emit(out, common.as_json);
    if (!ok) exit_code = 1;
  });

  auto* graded_dim = app.add_subcommand(
      "graded-dim", "dimension of the n-th J-adic graded quotient");
  graded_dim->add_option("--g", g, "genus")->required();
  graded_dim->add_option("--n", n, "graded degree")->required();
  graded_dim->add_option("--trunc", trunc, "truncation bound (default n+3)");
  graded_dim->callback([&] {
    Config config = load_config(common);
    int m = trunc.value_or(alexinv::default_truncation(n));
    json out = report_envelope("graded-dim", g, n, m, {});
    check_budget(config, g, n, m, {}, out);
    out["value"] = alexinv::graded_dimension(g, n, m);
    out["stable"] = true;  // certified at m and m+1 or it would have thrown
    emit(out, common.as_json);
  });

  auto* a_val = app.add_subcommand(
      "a-valuation",
      "J-adic valuation in the Alexander module of class(word), optionally "
      "scaled by a polynomial");
  a_val->add_option("--g", g, "genus")->required();
  a_val->add_option("--word", word_text,
                    "word in the commutator subgroup, e.g. 'a1 b1 a1^-1 b1^-1'")
      ->required();
  a_val->add_option("--scale", scale_text,
                    "polynomial scalar, e.g. '(x1-1)*(x2-1)'");
  a_val->add_option("--n", max_n, "valuation cap (default 3)");
  a_val->add_option("--trunc", trunc, "truncation bound (default cap+3)");
  a_val->callback([&] {
    Config config = load_config(common);
    int m = trunc.value_or(max_n + 3);
    json out = report_envelope("a-valuation", g, max_n, m, {});
    check_budget(config, g, max_n, m, {}, out);
    alexinv::AlexVector v =
        alexinv::alexander_class(alexinv::parse_word(g, word_text));
    if (!scale_text.empty())
      v = alexinv::module_scalar(alexinv::parse_poly(g, scale_text), v);
    int val = alexinv::a_valuation(v, max_n, m);
    out["value"] = val;
    out["capped"] = val == max_n;
    out["stable"] = true;
    emit(out, common.as_json);
  });

  auto* ng_bound = app.add_subcommand(
      "ng-bound",
      "computed J-adic valuation of w = (a1-1)(a2-1)[a1,b1], with its "
      "truncation certificate");
  ng_bound->add_option("--g", g, "genus")->required();
  ng_bound->add_option("--n", max_n, "valuation cap (default 3)");
  ng_bound->add_option("--trunc", trunc, "truncation bound (default cap+3)");
  ng_bound->callback([&] {
    Config config = load_config(common);
    int m = trunc.value_or(max_n + 3);
    json out = report_envelope("ng-bound", g, max_n, m, {});
    check_budget(config, g, max_n, m, {}, out);
    alexinv::FreeWord a1 = alexinv::FreeWord::generator(g, 1);
    alexinv::FreeWord b1 = alexinv::FreeWord::generator(g, g + 1);
    alexinv::LaurentPoly scale = alexinv::parse_poly(g, "(x1-1)*(x2-1)");
    alexinv::AlexVector w = alexinv::module_scalar(
        scale, alexinv::alexander_class(alexinv::commutator(a1, b1)));
    bool nonzero = !alexinv::is_multiple_of_theta(w);
    int val = alexinv::a_valuation(w, max_n, m);
    out["value"] = val;
    out["nonzero"] = nonzero;
    out["capped"] = val == max_n;
    out["stable"] = true;
    out["notes"] =
        "candidate value for the stabilization exponent; evidence computed "
        "at the stated truncation, reported rather than asserted";
    emit(out, common.as_json);
    if (!nonzero || val < 2) exit_code = 1;
  });

  auto* weyl = app.add_subcommand(
      "weyl-dim", "dimension of the irreducible with the given highest weight");
  weyl->add_option("--g", g, "genus (rank)")->required();
  weyl->add_option("--lambda", lambda_text,
                   "fundamental-weight coefficients, e.g. 1,1,0")
      ->required();
  weyl->callback([&] {
    Config config = load_config(common);
    json out = report_envelope("weyl-dim", g, {}, {}, {});
    check_budget(config, g, {}, {}, {}, out);
    std::vector<int> fund(static_cast<std::size_t>(g), 0);
    std::stringstream ss(lambda_text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
      if (i >= fund.size())
        throw std::invalid_argument("too many weight coefficients");
      fund[i++] = std::stoi(item);
    }
    alexinv::DominantWeight lambda{g, fund};
    out["lambda"] = lambda.to_string();
    out["value"] = alexinv::weyl_dim(lambda);
    out["stable"] = nullptr;
    emit(out, common.as_json);
  });

  auto* decomp = app.add_subcommand(
      "decomp",
      "highest-weight decomposition of Sym^n(H) (x) Lambda^2 H and its "
      "dimension identity");
  decomp->add_option("--g", g, "genus")->required();
  decomp->add_option("--n", n, "symmetric degree")->required();
  decomp->callback([&] {
    Config config = load_config(common);
    json out = report_envelope("decomp", g, n, {}, {});
    check_budget(config, g, {}, {}, {}, out);
    alexinv::DecompositionReport r = alexinv::decomposition_check(g, n);
    json summands = json::array();
    for (const auto& s : r.summands) {
      json item;
      item["weight"] = s.weight.to_string();
      item["multiplicity"] = s.multiplicity;
      item["dim"] = s.dim;
      summands.push_back(item);
    }
    out["value"] = json{{"summands", summands},
                        {"total", r.total},
                        {"ambient", r.ambient},
                        {"pass", r.pass}};
    out["stable"] = nullptr;
    emit(out, common.as_json);
    if (!r.pass) exit_code = 1;
  });

  auto* hwv = app.add_subcommand(
      "verify-hwv", "verify the catalog of highest weight vectors");
  hwv->add_option("--g", g, "genus")->required();
  hwv->add_option("--n", n, "symmetric degree")->required();
  hwv->callback([&] {
    Config config = load_config(common);
    json out = report_envelope("verify-hwv", g, n, {}, {});
    check_budget(config, g, {}, {}, {}, out);
    json rows = json::array();
    bool all = true;
    for (const auto& [t, lambda] : alexinv::highest_weight_catalog(g, n)) {
      bool ok = alexinv::verify_highest_weight(t, lambda);
      all = all && ok;
      rows.push_back(json{{"vector", alexinv::to_string(t)},
                          {"weight", lambda.to_string()},
                          {"highest_weight", ok}});
    }
    out["value"] = rows;
    out["stable"] = nullptr;
    emit(out, common.as_json);
    if (!all) exit_code = 1;
  });

  auto* vanishing = app.add_subcommand(
      "vanishing",
      "valuations of the grading-map images of the catalog vectors");
  vanishing->add_option("--g", g, "genus")->required();
  vanishing->add_option("--n", n, "symmetric degree")->required();
  vanishing->add_option("--trunc", trunc, "truncation bound (default n+4)");
  vanishing->callback([&] {
    Config config = load_config(common);
    int m = trunc.value_or(n + 1 + 3);
    json out = report_envelope("vanishing", g, n, m, {});
    check_budget(config, g, n, m, {}, out);
    json rows = json::array();
    for (const auto& [t, lambda] : alexinv::highest_weight_catalog(g, n)) {
      alexinv::AlexVector img = alexinv::grading_map(t);
      json row;
      row["vector"] = alexinv::to_string(t);
      if (alexinv::is_multiple_of_theta(img)) {
        row["image"] = "0";
      } else {
        int val = alexinv::a_valuation(img, n + 1, m);
        row["valuation"] = val;
        row["capped"] = val == n + 1;
      }
      rows.push_back(row);
    }
    out["value"] = rows;
    out["stable"] = true;
    emit(out, common.as_json);
  });

  auto* dehn = app.add_subcommand(
      "dehn-lemma",
      "twist difference of [a1,a2] under the one-handle separating twist "
      "against (a1-1)(a2-1)[a1,b1]");
  dehn->add_option("--g", g, "genus")->required();
  dehn->callback([&] {
    Config config = load_config(common);
    json out = report_envelope("dehn-lemma", g, {}, {}, {});
    check_budget(config, g, {}, {}, {}, out);
    alexinv::TwistSpec twist = alexinv::separating_twist(g, 1);
    alexinv::AlexVector diff = alexinv::twist_difference(
        twist.endo, alexinv::FreeWord::generator(g, 1),
        alexinv::FreeWord::generator(g, 2));
    alexinv::AlexVector target = alexinv::module_scalar(
        alexinv::parse_poly(g, "(x1-1)*(x2-1)"),
        alexinv::alexander_class(
            alexinv::commutator(alexinv::FreeWord::generator(g, 1),
                                alexinv::FreeWord::generator(g, g + 1))));
    bool ok = alexinv::equal_mod_theta(diff, target);
    out["value"] = ok ? "match" : "mismatch";
    out["stable"] = nullptr;
    emit(out, common.as_json);
    if (!ok) exit_code = 1;
  });

  auto* lcs = app.add_subcommand(
      "lcs-dims", "graded Lie algebra dimensions of the surface group");
  lcs->add_option("--g", g, "genus")->required();
  lcs->add_option("--max", max_degree, "largest degree (default 5)");
  lcs->callback([&] {
    Config config = load_config(common);
    json out = report_envelope("lcs-dims", g, {}, {}, max_degree + 1);
    check_budget(config, g, {}, {}, max_degree + 1, out);
    std::vector<long> dims = alexinv::graded_lie_dims(g, max_degree);
    std::vector<long> oracle = alexinv::lie_dims_from_series(g, max_degree);
    out["value"] = dims;
    out["oracle_match"] = dims == oracle;
    out["stable"] = nullptr;
    emit(out, common.as_json);
    if (dims != oracle) exit_code = 1;
  });

  auto* jdepth = app.add_subcommand(
      "johnson-depth", "Johnson filtration level of an endomorphism");
  jdepth->add_option("--g", g, "genus")->required();
  jdepth->add_option("--endo", endo_spec, "endomorphism, e.g. twist:c1");
  jdepth->add_option("--budget", budget_k, "series bound (default 4)");
  jdepth->callback([&] {
    Config config = load_config(common);
    json out = report_envelope("johnson-depth", g, {}, {}, budget_k);
    check_budget(config, g, {}, {}, budget_k, out);
    alexinv::TwistSpec twist =
        alexinv::separating_twist(g, parse_twist_handles(endo_spec));
    out["endo"] = endo_spec;
    out["value"] = alexinv::johnson_depth(twist.endo, budget_k);
    out["stable"] = nullptr;
    emit(out, common.as_json);
  });

  auto* tau = app.add_subcommand(
      "tau", "Johnson homomorphism value of an endomorphism at level n");
  tau->add_option("--g", g, "genus")->required();
  tau->add_option("--n", n, "filtration level")->required();
  tau->add_option("--endo", endo_spec, "endomorphism, e.g. twist:c1");
  tau->add_option("--budget", budget_k, "series bound (default n+2)");
  tau->callback([&] {
    Config config = load_config(common);
    int k = std::max(budget_k, n + 2);
    json out = report_envelope("tau", g, n, {}, k);
    check_budget(config, g, {}, {}, k, out);
    alexinv::TwistSpec twist =
        alexinv::separating_twist(g, parse_twist_handles(endo_spec));
    out["endo"] = endo_spec;
    json value;
    for (const auto& [index, series] :
         alexinv::johnson_tau(twist.endo, n, k)) {
      std::string name = index <= g ? "a" + std::to_string(index)
                                    : "b" + std::to_string(index - g);
      value[name] = alexinv::to_string(series);
    }
    out["value"] = value;
    out["stable"] = nullptr;
    emit(out, common.as_json);
  });

  auto* probe = app.add_subcommand(
      "kg1-probe",
      "span of separating-twist differences inside the J-adic filtration "
      "(exploratory)");
  probe->add_option("--g", g, "genus")->required();
  probe->add_option("--n", probe_max_n, "valuation cap (default 2)");
  probe->add_option("--trunc", trunc, "truncation bound (default cap+3)");
  probe->callback([&] {
    Config config = load_config(common);
    int max_n = probe_max_n;
    int m = trunc.value_or(max_n + 3);
    json out = report_envelope("kg1-probe", g, max_n, m, {});
    check_budget(config, g, max_n, m, {}, out);
    std::vector<alexinv::TwistSpec> twists;
    for (int h = 1; h < g; ++h)
      twists.push_back(alexinv::separating_twist(g, h));
    std::vector<std::pair<alexinv::FreeWord, alexinv::FreeWord>> pairs;
    for (int i = 1; i <= 2 * g; ++i)
      for (int j = i + 1; j <= 2 * g; ++j)
        pairs.emplace_back(alexinv::FreeWord::generator(g, i),
                           alexinv::FreeWord::generator(g, j));
    alexinv::ProbeReport r = alexinv::kg1_probe(g, twists, pairs, max_n, m);
    json entries = json::array();
    for (const auto& e : r.entries) {
      entries.push_back(json{{"twist", "twist:c" + std::to_string(e.twist_handles)},
                             {"u", alexinv::to_string(e.u)},
                             {"v", alexinv::to_string(e.v)},
                             {"zero", e.zero},
                             {"valuation", e.zero ? json(nullptr)
                                                  : json(e.valuation)}});
    }
    out["value"] = json{{"twists", static_cast<int>(twists.size())},
                        {"pairs", static_cast<int>(pairs.size())},
                        {"valuations", entries},
                        {"span_dims_per_degree", r.added_rank},
                        {"truncation", r.truncation}};
    out["stable"] = true;
    out["notes"] =
        "exploratory evidence only; finite probing cannot decide whether the "
        "twist-difference span equals a filtration layer";
    emit(out, common.as_json);
  });

  auto* verify = app.add_subcommand(
      "verify-all", "run the whole registered check suite and emit JSON");
  verify->add_flag("--timings", timings,
                   "include volatile runtimes in the JSON output");
  verify->callback([&] {
    Config config = load_config(common);
    std::vector<alexinv::CheckReport> reports = alexinv::verify_all(config);
    std::cout << alexinv::reports_to_json(reports, timings) << "\n";
    if (!alexinv::all_passed(reports)) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const alexinv::ConfigError& e) {
    std::cerr << json{{"error", "config"}, {"message", e.what()}}.dump()
              << "\n";
    return 2;
  } catch (const alexinv::BudgetExceeded& e) {
    std::cerr << json{{"error", "budget"}, {"message", e.what()}}.dump()
              << "\n";
    return 2;
  } catch (const alexinv::TruncationUnstable& e) {
    std::cerr << json{{"error", "truncation"}, {"message", e.what()}}.dump()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "invalid"}, {"message", e.what()}}.dump()
              << "\n";
    return 2;
  }
  return exit_code;
}
