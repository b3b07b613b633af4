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

#ifndef ALEXINV_CHECKS_HPP
#define ALEXINV_CHECKS_HPP

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace alexinv {

// Where an expected value comes from: a formula or value stated by the
// underlying mathematics (PAPER), an immediate consequence (TRIVIAL), or an
// independent computation/oracle (DERIVED). Every registered expectation
// carries one of these; the registry cannot hold an untagged check.
enum class Provenance { paper, trivial, derived };
std::string provenance_tag(Provenance p);

struct CheckParams {
  std::optional<int> g;
  std::optional<int> n;
  std::optional<int> trunc;
  std::optional<int> budget;
};

struct CheckOutcome {
  std::string actual;
  bool pass = false;
  std::string notes;
};

// Runtime configuration for verify-all: which genera run, degree caps,
// truncation margin (m = n + margin), and the seed for the randomized
// suites. Parsed from `key = value` text; unknown keys are errors.
struct Config {
  std::vector<int> genus_list{2, 3, 4};
  int max_n = 3;
  int budget_k = 6;
  int trunc_margin = 3;
  std::uint64_t seed = 20260808;
  bool allow_out_of_budget = false;
};

Config parse_config(std::istream& in);
Config parse_config_file(const std::string& path);

// Central computation budget. Checks and CLI invocations outside it are
// refused unless explicitly overridden, in which case the report is marked
// out-of-budget.
struct Budget {
  int max_genus = 4;
  int max_graded_n = 3;
  int max_series_bound = 6;
  int max_trunc_margin = 4;
};

// Throws BudgetExceeded if g / graded degree n / series bound k / truncation
// m lie outside the budget and `allow` is false. Returns true if the
// parameters are out of budget (and allowed), so reports can be marked.
bool enforce_budget(const Budget& budget, std::optional<int> g,
                    std::optional<int> n, std::optional<int> m,
                    std::optional<int> k, bool allow);

struct CheckDef {
  std::string id;
  Provenance provenance;
  std::string expected;
  CheckParams params;
  // Degree of a truncated-module computation, used for config skip logic;
  // empty for pure weight-theory or word-level checks.
  std::optional<int> graded_degree;
  std::function<CheckOutcome(const Config&)> run;
};

struct CheckReport {
  std::string id;
  CheckParams params;
  std::string expected;
  Provenance provenance;
  std::string actual;
  bool pass = false;
  bool skipped = false;
  bool out_of_budget = false;
  long runtime_ms = 0;
  std::string notes;
};

// All registered checks, in registration (= output) order.
const std::vector<CheckDef>& check_registry();

// Runs one registered check by id. Throws std::invalid_argument for unknown
// ids; budget violations throw BudgetExceeded unless the config allows them.
CheckReport run_check(const std::string& id, const Config& config);

// Runs the whole registry. Checks whose genus is not in the config's genus
// list (or whose graded degree exceeds max_n) are reported as skipped.
std::vector<CheckReport> verify_all(const Config& config);

// Canonical JSON array for a report list. Deterministic: two runs with the
// same config serialize byte-identically. Timings are volatile and therefore
// excluded unless explicitly requested.
std::string reports_to_json(const std::vector<CheckReport>& reports,
                            bool include_timings = false);

// True iff every non-skipped report passed.
bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace alexinv

#endif  // ALEXINV_CHECKS_HPP
