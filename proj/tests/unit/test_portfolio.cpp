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

#include <random>
#include <sstream>

#include "doctest.h"
#include "rcc8/generator.hpp"
#include "rcc8/portfolio.hpp"
#include "test_util.hpp"

using namespace rcc8;

namespace {

constexpr std::uint64_t kCap = 1000;

RunRecord unsolved_record(const std::string& id) {
  RunRecord r;
  r.instance_id = id;
  for (auto& slot : r.results) {
    slot = ConfigResult{SolveStatus::BudgetExhausted, kCap, kCap};
  }
  return r;
}

std::vector<RunRecord> random_records(std::mt19937_64& rng, int count) {
  std::vector<RunRecord> out;
  std::uniform_int_distribution<std::uint64_t> nodes(1, kCap);
  std::bernoulli_distribution decided(0.4);
  for (int k = 0; k < count; ++k) {
    RunRecord r = unsolved_record("i" + std::to_string(k));
    for (auto& slot : r.results) {
      if (decided(rng)) slot = ConfigResult{SolveStatus::Consistent, nodes(rng), kCap};
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("default plan") {
  PortfolioPlan p = default_plan(500);
  REQUIRE(p.entries.size() == 4);
  for (const auto& e : p.entries) CHECK(e.budget == 1000);
  CHECK(p.total_budget() == 4000);
  CHECK(p.entries[0].config == HeuristicConfig{SplitSetId::H8, Ordering::Dynamic, Scope::Local});
  CHECK(p.entries[1].config == HeuristicConfig{SplitSetId::H8, Ordering::Static, Scope::Global});
  CHECK(p.entries[2].config == HeuristicConfig{SplitSetId::C8, Ordering::Dynamic, Scope::Local});
  CHECK(p.entries[3].config == HeuristicConfig{SplitSetId::Bhat, Ordering::Static, Scope::Local});
  ConfigMask mask = 0;
  for (const auto& e : p.entries) mask |= 1u << e.config.id();
  CHECK(combination_name(mask) == "Bhat-s-l+H8-s-g+H8-d-l+C8-d-l");
  for (const auto& e : default_plan(2).entries) CHECK(e.budget == 4);
  CHECK_THROWS_AS(default_plan(1), std::invalid_argument);
}

TEST_CASE("run portfolio") {
  Network tri(3);
  tri.set(0, 1, Base::TPP);
  tri.set(1, 2, Base::TPP);
  tri.set(0, 2, Base::DC);
  PortfolioOutcome bad = run_portfolio(tri, default_plan(3));
  CHECK(bad.outcome.status == SolveStatus::Inconsistent);
  REQUIRE(bad.first_responder.has_value());
  CHECK(*bad.first_responder == default_plan(3).entries[0].config);
  CHECK(bad.total_nodes == 1);

  // A generated instance that fails path-consistency at the root.
  for (std::uint64_t seed = 1;; ++seed) {
    Instance inst = generate({Model::A, 40, 20.0, 4.0, seed});
    PortfolioOutcome o = run_portfolio(inst.network, default_plan(40));
    if (o.outcome.status != SolveStatus::Inconsistent) continue;
    if (o.total_nodes == 1) {
      CHECK(o.attempts.size() == 1);
      break;
    }
  }

  // Budgets of one node cannot branch: every member runs out.
  Instance hard = generate({Model::H, 20, 9.0, 4.0, 3});
  PortfolioPlan tiny = default_plan(20);
  for (auto& e : tiny.entries) e.budget = 1;
  PortfolioOutcome o = run_portfolio(hard.network, tiny);
  if (!o.outcome.decided()) {
    CHECK_FALSE(o.first_responder.has_value());
    CHECK(o.total_nodes == 4);
    CHECK(o.attempts.size() == 4);
  }
  CHECK_THROWS_AS(run_portfolio(hard.network, PortfolioPlan{}), std::invalid_argument);
}

TEST_CASE("live portfolio matches the recorded prediction") {
  std::mt19937_64 rng(51);
  for (int k = 0; k < 15; ++k) {
    Instance inst = generate({Model::H, 16, 10.0, 4.0, rng()});
    PortfolioPlan plan = default_plan(16);
    std::uint64_t predicted = 0;
    std::optional<HeuristicConfig> first;
    for (const auto& e : plan.entries) {
      SolveOutcome rec = solve(inst.network, e.config, 10000);
      ConfigResult r{rec.status, rec.visited_nodes, 10000};
      if (r.solved_within(e.budget)) {
        predicted += rec.visited_nodes;
        first = e.config;
        break;
      }
      predicted += e.budget;
    }
    PortfolioOutcome live = run_portfolio(inst.network, plan);
    CHECK(live.total_nodes == predicted);
    CHECK(live.first_responder == first);
  }
}

TEST_CASE("plan files") {
  std::stringstream s;
  write_plan(s, default_plan(7));
  PortfolioPlan back = read_plan(s, "plan");
  REQUIRE(back.entries.size() == 4);
  CHECK(back.entries[1].config == default_plan(7).entries[1].config);
  CHECK(back.entries[3].budget == 14);
  std::istringstream bad("H8 dynamic local\n");
  CHECK_THROWS_AS(read_plan(bad, "p"), DataError);
  std::istringstream bad2("# only a comment\n");
  CHECK_THROWS_AS(read_plan(bad2, "p"), DataError);
  std::istringstream bad3("H8 sideways local 10\n");
  CHECK_THROWS_AS(read_plan(bad3, "p"), DataError);
}

TEST_CASE("records CSV round-trip") {
  std::mt19937_64 rng(52);
  auto records = random_records(rng, 5);
  std::stringstream s;
  write_records_csv(s, records);
  auto back = read_records_csv(s, "rec");
  REQUIRE(back.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(back[k].instance_id == records[k].instance_id);
    for (int c = 0; c < HeuristicConfig::kCount; ++c) {
      CHECK(back[k].results[c]->status == records[k].results[c]->status);
      CHECK(back[k].results[c]->visited_nodes == records[k].results[c]->visited_nodes);
    }
  }
  std::istringstream dup(
      "instance_id,split,order,scope,status,visited_nodes,cap\n"
      "a,H8,dynamic,local,consistent,3,10\n"
      "a,H8,dynamic,local,consistent,3,10\n");
  CHECK_THROWS_AS(read_records_csv(dup, "r"), DataError);
  std::istringstream over(
      "instance_id,split,order,scope,status,visited_nodes,cap\n"
      "a,H8,dynamic,local,consistent,30,10\n");
  CHECK_THROWS_AS(read_records_csv(over, "r"), DataError);
}

TEST_CASE("optimizer on a hand-built record") {
  // Config A solves instances 1 and 2, config B solves 3, both in 50 nodes.
  const int a = HeuristicConfig{SplitSetId::H8, Ordering::Dynamic, Scope::Local}.id();
  const int b = HeuristicConfig{SplitSetId::C8, Ordering::Static, Scope::Global}.id();
  std::vector<RunRecord> recs = {unsolved_record("1"), unsolved_record("2"),
                                 unsolved_record("3")};
  recs[0].results[a] = ConfigResult{SolveStatus::Consistent, 50, kCap};
  recs[1].results[a] = ConfigResult{SolveStatus::Inconsistent, 50, kCap};
  recs[2].results[b] = ConfigResult{SolveStatus::Consistent, 50, kCap};
  CombinationResult r = optimize_combination(recs, 100);
  CHECK(r.solved == 3);
  CHECK(r.best == ((1u << a) | (1u << b)));
  CHECK(solved_by(recs, 1u << a, 100) == 2);
  CHECK(solved_by(recs, 1u << b, 100) == 1);
  // Budget 99 gives 49 each: nothing solved, smallest subset wins ties.
  CombinationResult low = optimize_combination(recs, 99);
  CHECK(low.solved == 2);  // A alone with 99 nodes
  CHECK(low.best == (1u << a));
  CHECK_THROWS_AS(optimize_combination(recs, kCap + 1), std::invalid_argument);
  RunRecord partial = unsolved_record("p");
  partial.results[3].reset();
  CHECK_THROWS_AS(optimize_combination({partial}, 10), std::invalid_argument);
}

TEST_CASE("optimizer properties") {
  std::mt19937_64 rng(53);
  auto recs = random_records(rng, 40);
  std::size_t prev = 0;
  for (std::uint64_t budget : {20, 100, 300, 600, 1000}) {
    CombinationResult r = optimize_combination(recs, budget);
    CHECK(r.solved >= prev);
    prev = r.solved;
    CHECK(r.solved == solved_by(recs, r.best, budget));
    for (int c = 0; c < HeuristicConfig::kCount; ++c) {
      CHECK(r.solved >= solved_by(recs, 1u << c, budget));
    }
    // Any subset is at least as good as its best member at the split budget.
    for (int t = 0; t < 50; ++t) {
      ConfigMask mask = static_cast<ConfigMask>(rng() & ((1u << 20) - 1));
      if (mask == 0) continue;
      std::uint64_t each = budget / std::popcount(mask);
      std::size_t best_member = 0;
      for (const auto& c : configs_in(mask)) {
        best_member = std::max(best_member, solved_by(recs, 1u << c.id(), each));
      }
      CHECK(solved_by(recs, mask, budget) >= best_member);
    }
  }
  // All 20 at the cap: solved iff some config decides within cap / 20.
  std::size_t any = 0;
  for (const auto& rec : recs) {
    for (const auto& r : rec.results) {
      if (r->solved_within(kCap / 20)) {
        ++any;
        break;
      }
    }
  }
  CHECK(solved_by(recs, (1u << 20) - 1, kCap) == any);
  auto rows = optimize_combination(recs, std::vector<std::uint64_t>{50, 500});
  CHECK(rows.size() == 2);
  CHECK(rows[0].solved <= rows[1].solved);
}

TEST_CASE("first response table") {
  const int a = 0, b = 7;
  std::vector<RunRecord> recs = {unsolved_record("1"), unsolved_record("2")};
  for (auto& r : recs) {
    r.results[a] = ConfigResult{SolveStatus::Consistent, 5, kCap};
    r.results[b] = ConfigResult{SolveStatus::Consistent, 9, kCap};
  }
  auto rows = first_response_table(recs);
  CHECK(rows[a].first_response_pct == 100.0);
  CHECK(rows[b].first_response_pct == 0.0);
  CHECK(rows[b].solved_pct == 100.0);
  CHECK(rows[3].solved_pct == 0.0);
  for (auto& r : recs) r.results[b]->visited_nodes = 5;
  rows = first_response_table(recs);
  CHECK(rows[a].first_response_pct == 100.0);
  CHECK(rows[b].first_response_pct == 100.0);
  CHECK_THROWS_AS(first_response_table({}), std::invalid_argument);
}
