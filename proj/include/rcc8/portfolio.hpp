// Copyright 2026 The rcc8 Authors
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

#ifndef RCC8_PORTFOLIO_HPP_
#define RCC8_PORTFOLIO_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rcc8/network.hpp"
#include "rcc8/solver.hpp"

namespace rcc8 {

struct PlanEntry {
  HeuristicConfig config;
  std::uint64_t budget = 0;
};

// Heuristics tried one after another, each with its own node budget.
struct PortfolioPlan {
  std::vector<PlanEntry> entries;

  std::uint64_t total_budget() const;
};

// H8/dynamic/local, H8/static/global, C8/dynamic/local, Bhat/static/local,
// 2n nodes each.
PortfolioPlan default_plan(int n);

struct PortfolioOutcome {
  SolveOutcome outcome;  // the deciding run, or the last attempt
  std::optional<HeuristicConfig> first_responder;
  std::uint64_t total_nodes = 0;
  std::vector<SolveOutcome> attempts;
};

// Runs the plan in order and stops at the first decided outcome.
PortfolioOutcome run_portfolio(const Network& net, const PortfolioPlan& plan,
                               SolverOptions options = {});

// Plan file: one `split order scope budget` line per entry, `#` comments.
PortfolioPlan read_plan(std::istream& in, const std::string& source);
void write_plan(std::ostream& out, const PortfolioPlan& plan);

// Result of one heuristic on one instance, run with node cap `cap`.
struct ConfigResult {
  SolveStatus status = SolveStatus::BudgetExhausted;
  std::uint64_t visited_nodes = 0;
  std::uint64_t cap = 0;

  // Whether a run with this budget would decide the instance. Requires
  // budget <= cap when the recorded run was exhausted.
  bool solved_within(std::uint64_t budget) const {
    return status != SolveStatus::BudgetExhausted && visited_nodes <= budget;
  }
};

struct RunRecord {
  std::string instance_id;
  std::array<std::optional<ConfigResult>, HeuristicConfig::kCount> results;

  bool complete() const;
  // Smallest cap over the recorded configs.
  std::uint64_t cap() const;
};

// Records CSV: instance_id,split,order,scope,status,visited_nodes,cap
void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_records_csv(std::istream& in,
                                        const std::string& source);

// Subsets of the 20 heuristics as bit masks over HeuristicConfig::id().
using ConfigMask = std::uint32_t;

std::vector<HeuristicConfig> configs_in(ConfigMask mask);
// "H8-d-l+C8-d-l"
std::string combination_name(ConfigMask mask);

// Instances solved when every member of `mask` gets floor(budget/|mask|)
// nodes.
std::size_t solved_by(const std::vector<RunRecord>& records, ConfigMask mask,
                      std::uint64_t total_budget);

struct CombinationResult {
  std::uint64_t budget = 0;
  ConfigMask best = 0;
  std::size_t solved = 0;
};

// Exhaustive search over all 2^20 - 1 non-empty subsets. Ties go to the
// smaller subset, then to the lexicographically smaller sorted id list.
// Throws std::invalid_argument if a record is incomplete or capped below the
// budget.
CombinationResult optimize_combination(const std::vector<RunRecord>& records,
                                       std::uint64_t total_budget);
std::vector<CombinationResult> optimize_combination(
    const std::vector<RunRecord>& records,
    const std::vector<std::uint64_t>& budgets);

struct FirstResponseRow {
  HeuristicConfig config;
  double solved_pct = 0.0;
  double first_response_pct = 0.0;
};

// Every config reaching the smallest node count on a solved instance gets
// first-response credit, so the column can sum to more than 100.
std::vector<FirstResponseRow> first_response_table(
    const std::vector<RunRecord>& records);

}  // namespace rcc8

#endif  // RCC8_PORTFOLIO_HPP_
