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

#include "alexinv/checks.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "alexinv/errors.hpp"
#include "alexinv/fox.hpp"
#include "alexinv/magnus.hpp"
#include "alexinv/mapclass.hpp"
#include "alexinv/randgen.hpp"
#include "alexinv/symrep.hpp"
#include "alexinv/words.hpp"

namespace alexinv {

std::string provenance_tag(Provenance p) {
  switch (p) {
    case Provenance::paper:
      return "PAPER";
    case Provenance::trivial:
      return "TRIVIAL";
    case Provenance::derived:
      return "DERIVED";
  }
  return "UNKNOWN";
}

namespace {

std::vector<int> parse_int_list(const std::string& value) {
  std::vector<int> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Config parse_config(std::istream& in) {
  Config config;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "genus") {
        config.genus_list = parse_int_list(value);
        if (config.genus_list.empty())
          throw ConfigError("config: empty genus list");
      } else if (key == "max_n") {
        config.max_n = std::stoi(value);
      } else if (key == "budget_k") {
        config.budget_k = std::stoi(value);
      } else if (key == "trunc_margin") {
        config.trunc_margin = std::stoi(value);
      } else if (key == "seed") {
        config.seed = std::stoull(value);
      } else if (key == "allow_out_of_budget") {
        config.allow_out_of_budget = value == "1" || value == "true";
      } else {
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": malformed value '" + value + "'");
    }
  }
  if (config.trunc_margin < 2)
    throw ConfigError("config: trunc_margin must be >= 2");
  if (config.max_n < 0) throw ConfigError("config: max_n must be >= 0");
  return config;
}

Config parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_config(in);
}

bool enforce_budget(const Budget& budget, std::optional<int> g,
                    std::optional<int> n, std::optional<int> m,
                    std::optional<int> k, bool allow) {
  std::string over;
  if (g && *g > budget.max_genus) over = "genus " + std::to_string(*g);
  if (n && *n > budget.max_graded_n)
    over = "graded degree " + std::to_string(*n);
  if (m && n && *m > *n + budget.max_trunc_margin)
    over = "truncation " + std::to_string(*m);
  if (k && *k > budget.max_series_bound)
    over = "series bound " + std::to_string(*k);
  if (over.empty()) return false;
  if (!allow)
    throw BudgetExceeded("out of budget: " + over +
                         " (pass the override to run anyway)");
  return true;
}

namespace {

SplitMix64 check_rng(const Config& config, const std::string& id) {
  return SplitMix64(config.seed ^ fnv1a(id));
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// --- check runners ---------------------------------------------------------

CheckOutcome run_fox_relator(int g, const Config&) {
  bool ok = fox_vector(surface_relator(g)) == theta_relator(g);
  return {ok ? "match" : "mismatch", ok, ""};
}

CheckOutcome run_fox_identity(int g, const Config& config,
                              const std::string& id) {
  SplitMix64 rng = check_rng(config, id);
  const int cases = 200;
  int ok = 0;
  for (int t = 0; t < cases; ++t) {
    FreeWord w = random_word(rng, g, 12);
    AlexVector fv = fox_vector(w);
    LaurentPoly lhs(g);
    for (int j = 1; j <= 2 * g; ++j) {
      lhs += fv.entry(j) * (LaurentPoly::variable(g, j) -
                            LaurentPoly::constant(g, 1));
    }
    LaurentPoly rhs =
        abelianization_monomial(w) - LaurentPoly::constant(g, 1);
    if (lhs == rhs) ++ok;
  }
  return {"ok(" + std::to_string(ok) + "/" + std::to_string(cases) + ")",
          ok == cases, ""};
}

CheckOutcome run_hall_witt(int g, const Config& config,
                           const std::string& id) {
  SplitMix64 rng = check_rng(config, id);
  const int cases = 100;
  int ok = 0;
  for (int t = 0; t < cases; ++t) {
    FreeWord x = random_word(rng, g, 6);
    FreeWord y = random_word(rng, g, 6);
    FreeWord z = random_word(rng, g, 6);
    FreeWord residue = commutator(x, y * z) *
                       conjugate(commutator(x, z), y.inverse()).inverse() *
                       commutator(x, y).inverse();
    if (residue.empty()) ++ok;
  }
  return {"ok(" + std::to_string(ok) + "/" + std::to_string(cases) + ")",
          ok == cases, ""};
}

CheckOutcome run_jacobi(int g, const Config& config, const std::string& id) {
  SplitMix64 rng = check_rng(config, id);
  const int cases = 100;
  int ok = 0;
  for (int t = 0; t < cases; ++t) {
    FreeWord x = random_word(rng, g, 4);
    FreeWord y = random_word(rng, g, 4);
    FreeWord z = random_word(rng, g, 4);
    AlexVector sum = alexander_class(commutator(x, commutator(y, z))) +
                     alexander_class(commutator(y, commutator(z, x))) +
                     alexander_class(commutator(z, commutator(x, y)));
    if (is_multiple_of_theta(sum)) ++ok;
  }
  return {"ok(" + std::to_string(ok) + "/" + std::to_string(cases) + ")",
          ok == cases, ""};
}

CheckOutcome run_graded_weyl(int g, int n, const Config& config) {
  const int m = n + config.trunc_margin;
  int graded = graded_dimension(g, n, m);
  DominantWeight lambda =
      weight_sum(fundamental_weight(g, 1, n), fundamental_weight(g, 2, 1));
  long weyl = weyl_dim(lambda);
  bool pass = graded > 0 && graded == weyl;
  return {"graded=" + std::to_string(graded) +
              " weyl=" + std::to_string(weyl),
          pass, "stable at truncation " + std::to_string(m) + "," +
                    std::to_string(m + 1)};
}

CheckOutcome run_decomp(int g, int n, const Config&) {
  DecompositionReport r = decomposition_check(g, n);
  return {"total=" + std::to_string(r.total) +
              " ambient=" + std::to_string(r.ambient),
          r.pass, ""};
}

CheckOutcome run_hwv(int g, int n, const Config&) {
  auto catalog = highest_weight_catalog(g, n);
  int ok = 0;
  for (const auto& [t, lambda] : catalog) {
    if (verify_highest_weight(t, lambda)) ++ok;
  }
  bool pass = ok == static_cast<int>(catalog.size());
  return {"verified " + std::to_string(ok) + "/" +
              std::to_string(catalog.size()) + " vectors",
          pass, ""};
}

CheckOutcome run_vanishing(int g, int n, const Config& config) {
  const int m = (n + 1) + config.trunc_margin;
  auto catalog = highest_weight_catalog(g, n);
  std::string vals;
  bool pass = true;
  for (std::size_t row = 0; row < catalog.size(); ++row) {
    AlexVector img = grading_map(catalog[row].first);
    std::string tok;
    if (is_multiple_of_theta(img)) {
      tok = "0";  // image vanishes in the module outright
      if (row == 0) pass = false;
    } else {
      int val = a_valuation(img, n + 1, m);
      tok = (val == n + 1 ? ">=" : "") + std::to_string(val);
      if (row == 0) {
        if (val != n) pass = false;
      } else {
        if (val <= n) pass = false;
      }
    }
    vals += (vals.empty() ? "" : ",") + tok;
  }
  return {"vals=[" + vals + "]", pass,
          "first entry is the top vector (valuation must be exactly n); all "
          "others must lie deeper than n"};
}

CheckOutcome run_dehn_lemma(int g, const Config&) {
  TwistSpec twist = separating_twist(g, 1);
  FreeWord a1 = FreeWord::generator(g, 1);
  FreeWord a2 = FreeWord::generator(g, 2);
  AlexVector diff = twist_difference(twist.endo, a1, a2);
  LaurentPoly scale =
      (LaurentPoly::variable(g, 1) - LaurentPoly::constant(g, 1)) *
      (LaurentPoly::variable(g, 2) - LaurentPoly::constant(g, 1));
  AlexVector target = module_scalar(
      scale, alexander_class(commutator(a1, FreeWord::generator(g, g + 1))));
  bool ok = equal_mod_theta(diff, target);
  return {ok ? "match" : "mismatch", ok, ""};
}

CheckOutcome run_ng_bound(int g, const Config& config) {
  const int max_n = 3;
  const int m = max_n + config.trunc_margin;
  FreeWord a1 = FreeWord::generator(g, 1);
  FreeWord b1 = FreeWord::generator(g, g + 1);
  LaurentPoly scale =
      (LaurentPoly::variable(g, 1) - LaurentPoly::constant(g, 1)) *
      (LaurentPoly::variable(g, 2) - LaurentPoly::constant(g, 1));
  AlexVector w = module_scalar(scale, alexander_class(commutator(a1, b1)));
  bool nonzero = !is_multiple_of_theta(w);
  int val = a_valuation(w, max_n, m);
  bool pass = nonzero && val >= 2;
  std::string notes =
      "computed candidate N_g = " + std::to_string(val) + " at genus " +
      std::to_string(g) + " (stable at truncation " + std::to_string(m) +
      "," + std::to_string(m + 1) + ", cap " + std::to_string(max_n) +
      "); evidence only, reported rather than asserted";
  return {"nonzero=" + bool_str(nonzero) + " valuation=" +
              std::to_string(val),
          pass, notes};
}

CheckOutcome run_lcs_dims(int g, const Config&) {
  const int max_degree = 5;
  std::vector<long> dims = graded_lie_dims(g, max_degree);
  std::vector<long> oracle = lie_dims_from_series(g, max_degree);
  bool pass = dims == oracle && dims[0] == 2L * g &&
              dims[1] == 2L * g * g - g - 1;
  std::string list;
  for (long d : dims) list += (list.empty() ? "" : ",") + std::to_string(d);
  return {"dims=[" + list + "] oracle=" +
              (dims == oracle ? "match" : "mismatch"),
          pass, ""};
}

CheckOutcome run_johnson_depth(int g, int h, const Config&) {
  const int bound = 4;  // enough to certify depth 2 (tau_2 lives in degree 3)
  TwistSpec twist = separating_twist(g, h);
  int depth = johnson_depth(twist.endo, bound);
  return {std::to_string(depth), depth == 2,
          "series bound " + std::to_string(bound)};
}

CheckOutcome run_kg1_probe(int g, const Config& config) {
  const int max_n = 2;
  const int m = max_n + std::max(config.trunc_margin, 3);
  std::vector<TwistSpec> twists;
  for (int h = 1; h < g; ++h) twists.push_back(separating_twist(g, h));
  std::vector<std::pair<FreeWord, FreeWord>> pairs;
  for (int i = 1; i <= 2 * g; ++i) {
    for (int j = i + 1; j <= 2 * g; ++j) {
      pairs.emplace_back(FreeWord::generator(g, i),
                         FreeWord::generator(g, j));
    }
  }
  ProbeReport report = kg1_probe(g, twists, pairs, max_n, m);
  int nonzero = 0;
  int min_val = max_n;
  bool lemma_nonzero = false;
  bool pass = true;
  for (const ProbeEntry& e : report.entries) {
    if (e.zero) continue;
    ++nonzero;
    min_val = std::min(min_val, e.valuation);
    if (e.valuation < 2) pass = false;
    if (e.twist_handles == 1 && e.u == FreeWord::generator(g, 1) &&
        e.v == FreeWord::generator(g, 2))
      lemma_nonzero = true;
  }
  pass = pass && lemma_nonzero;
  std::string ranks;
  for (int r : report.added_rank)
    ranks += (ranks.empty() ? "" : ",") + std::to_string(r);
  return {"nonzero=" + std::to_string(nonzero) + "/" +
              std::to_string(report.entries.size()) +
              " min_valuation=" + std::to_string(min_val) +
              " span_over_J^n=[" + ranks + "]",
          pass,
          "exploratory evidence only; finite probing cannot decide whether "
          "the twist-difference span equals a filtration layer"};
}

// --- registry --------------------------------------------------------------

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> defs;
  auto add = [&](std::string id, Provenance prov, std::string expected,
                 CheckParams params, std::optional<int> graded_degree,
                 std::function<CheckOutcome(const Config&)> run) {
    if (expected.empty())
      throw std::logic_error("refusing to register an untagged expectation");
    defs.push_back(CheckDef{std::move(id), prov, std::move(expected), params,
                            graded_degree, std::move(run)});
  };

  for (int g : {2, 3, 4}) {
    std::string id = "fox-relator g=" + std::to_string(g);
    add(id, Provenance::paper,
        "(1-x_{g+1},...,1-x_{2g},-(1-x_1),...,-(1-x_g))",
        CheckParams{g, {}, {}, {}}, {},
        [g](const Config& c) { return run_fox_relator(g, c); });
  }
  for (int g : {2, 3}) {
    std::string id = "fox-identity g=" + std::to_string(g);
    add(id, Provenance::paper, "ok(200/200)", CheckParams{g, {}, {}, {}}, {},
        [g, id](const Config& c) { return run_fox_identity(g, c, id); });
  }
  {
    std::string id = "hall-witt g=2";
    add(id, Provenance::paper, "ok(100/100)", CheckParams{2, {}, {}, {}}, {},
        [id](const Config& c) { return run_hall_witt(2, c, id); });
  }
  {
    std::string id = "jacobi g=2";
    add(id, Provenance::paper, "ok(100/100)", CheckParams{2, {}, {}, {}}, {},
        [id](const Config& c) { return run_jacobi(2, c, id); });
  }
  for (auto [g, n] : std::vector<std::pair<int, int>>{
           {2, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 0}, {3, 1}, {3, 2}}) {
    std::string id =
        "graded-weyl g=" + std::to_string(g) + " n=" + std::to_string(n);
    add(id, Provenance::derived, "graded == weyl, both > 0",
        CheckParams{g, n, {}, {}}, n,
        [g, n](const Config& c) { return run_graded_weyl(g, n, c); });
  }
  for (int g : {2, 3, 4}) {
    for (int n : {1, 2, 3, 4}) {
      std::string id =
          "decomp g=" + std::to_string(g) + " n=" + std::to_string(n);
      add(id, Provenance::paper, "total == ambient",
          CheckParams{g, n, {}, {}}, {},
          [g, n](const Config& c) { return run_decomp(g, n, c); });
    }
  }
  for (int g : {2, 3, 4}) {
    for (int n : {2, 3}) {
      std::string id =
          "hwv g=" + std::to_string(g) + " n=" + std::to_string(n);
      add(id, Provenance::paper, "all catalog vectors are highest weight",
          CheckParams{g, n, {}, {}}, {},
          [g, n](const Config& c) { return run_hwv(g, n, c); });
    }
  }
  for (int n : {1, 2}) {
    std::string id = "vanishing g=2 n=" + std::to_string(n);
    add(id, Provenance::paper,
        "top vector at valuation n, all other images deeper",
        CheckParams{2, n, {}, {}}, n,
        [n](const Config& c) { return run_vanishing(2, n, c); });
  }
  for (int g : {2, 3}) {
    std::string id = "dehn-lemma g=" + std::to_string(g);
    add(id, Provenance::paper,
        "twist difference == (a1-1)(a2-1)[a1,b1] mod Theta",
        CheckParams{g, {}, {}, {}}, {},
        [g](const Config& c) { return run_dehn_lemma(g, c); });
  }
  {
    std::string id = "ng-bound g=2";
    add(id, Provenance::paper, "w nonzero and valuation >= 2",
        CheckParams{2, 3, {}, {}}, 3,
        [](const Config& c) { return run_ng_bound(2, c); });
  }
  for (int g : {2, 3}) {
    std::string id = "lcs-dims g=" + std::to_string(g);
    add(id, Provenance::derived,
        "rank dims match the generating-function oracle; n=1: 2g, n=2: "
        "2g^2-g-1",
        CheckParams{g, {}, {}, 6}, {},
        [g](const Config& c) { return run_lcs_dims(g, c); });
  }
  for (int g : {2, 3, 4}) {
    for (int h = 1; h < g; ++h) {
      std::string id = "johnson-depth g=" + std::to_string(g) +
                       " h=" + std::to_string(h);
      add(id, Provenance::derived, "2", CheckParams{g, {}, {}, 4}, {},
          [g, h](const Config& c) { return run_johnson_depth(g, h, c); });
    }
  }
  {
    std::string id = "kg1-probe g=2";
    add(id, Provenance::paper,
        "all twist differences lie in J^2; the Dehn-lemma difference is "
        "nonzero",
        CheckParams{2, 2, {}, {}}, 2,
        [](const Config& c) { return run_kg1_probe(2, c); });
  }
  return defs;
}

CheckReport execute(const CheckDef& def, const Config& config) {
  CheckReport report;
  report.id = def.id;
  report.params = def.params;
  report.expected = def.expected;
  report.provenance = def.provenance;
  Budget budget;
  std::optional<int> trunc = def.params.trunc;
  if (!trunc && def.graded_degree)
    trunc = *def.graded_degree + config.trunc_margin;
  report.params.trunc = trunc;
  report.out_of_budget =
      enforce_budget(budget, def.params.g, def.graded_degree, trunc,
                     def.params.budget, config.allow_out_of_budget);
  auto start = std::chrono::steady_clock::now();
  CheckOutcome outcome = def.run(config);
  auto stop = std::chrono::steady_clock::now();
  report.actual = outcome.actual;
  report.pass = outcome.pass;
  report.notes = outcome.notes;
  report.runtime_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
          .count());
  return report;
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> registry = build_registry();
  return registry;
}

CheckReport run_check(const std::string& id, const Config& config) {
  for (const CheckDef& def : check_registry()) {
    if (def.id == id) return execute(def, config);
  }
  throw std::invalid_argument("unknown check id: " + id);
}

std::vector<CheckReport> verify_all(const Config& config) {
  std::vector<CheckReport> reports;
  reports.reserve(check_registry().size());
  for (const CheckDef& def : check_registry()) {
    bool genus_ok = true;
    if (def.params.g) {
      genus_ok = false;
      for (int g : config.genus_list) genus_ok = genus_ok || g == *def.params.g;
    }
    bool degree_ok =
        !def.graded_degree || *def.graded_degree <= config.max_n;
    if (!genus_ok || !degree_ok) {
      CheckReport report;
      report.id = def.id;
      report.params = def.params;
      report.expected = def.expected;
      report.provenance = def.provenance;
      report.skipped = true;
      report.actual = "";
      report.notes = !genus_ok ? "skipped: genus not in config"
                               : "skipped: degree above config max_n";
      reports.push_back(std::move(report));
      continue;
    }
    reports.push_back(execute(def, config));
  }
  return reports;
}

std::string reports_to_json(const std::vector<CheckReport>& reports,
                            bool include_timings) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckReport& r : reports) {
    nlohmann::ordered_json params;
    params["g"] = r.params.g ? nlohmann::ordered_json(*r.params.g)
                             : nlohmann::ordered_json(nullptr);
    params["n"] = r.params.n ? nlohmann::ordered_json(*r.params.n)
                             : nlohmann::ordered_json(nullptr);
    params["trunc"] = r.params.trunc ? nlohmann::ordered_json(*r.params.trunc)
                                     : nlohmann::ordered_json(nullptr);
    params["budget"] = r.params.budget
                           ? nlohmann::ordered_json(*r.params.budget)
                           : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json item;
    item["id"] = r.id;
    item["params"] = params;
    item["expected"] = r.expected;
    item["provenance"] = provenance_tag(r.provenance);
    if (r.skipped) {
      item["actual"] = nullptr;
      item["pass"] = nullptr;
    } else {
      item["actual"] = r.actual;
      item["pass"] = r.pass;
    }
    item["skipped"] = r.skipped;
    if (r.out_of_budget) item["out_of_budget"] = true;
    if (include_timings) item["runtime_ms"] = r.runtime_ms;
    item["notes"] = r.notes;
    arr.push_back(std::move(item));
  }
  return arr.dump(2);
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports) {
    if (!r.skipped && !r.pass) return false;
  }
  return true;
}

}  // namespace alexinv
