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

#include "rcc8/portfolio.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rcc8/csv.hpp"

namespace rcc8 {

std::uint64_t PortfolioPlan::total_budget() const {
  std::uint64_t total = 0;
  for (const auto& e : entries) total += e.budget;
  return total;
}

PortfolioPlan default_plan(int n) {
  if (n < 2) throw std::invalid_argument("default plan needs n >= 2");
  const std::uint64_t each = 2ull * static_cast<std::uint64_t>(n);
  PortfolioPlan plan;
  plan.entries = {
      {{SplitSetId::H8, Ordering::Dynamic, Scope::Local}, each},
      {{SplitSetId::H8, Ordering::Static, Scope::Global}, each},
      {{SplitSetId::C8, Ordering::Dynamic, Scope::Local}, each},
      {{SplitSetId::Bhat, Ordering::Static, Scope::Local}, each},
  };
  return plan;
}

PortfolioOutcome run_portfolio(const Network& net, const PortfolioPlan& plan,
                               SolverOptions options) {
  if (plan.entries.empty()) throw std::invalid_argument("empty plan");
  PortfolioOutcome result;
  for (const auto& entry : plan.entries) {
    Solver solver(RelationAlgebra::standard(), entry.config, options);
    SolveOutcome o = solver.solve(net, entry.budget);
    result.total_nodes += o.visited_nodes;
    result.attempts.push_back(o);
    if (o.decided()) {
      result.first_responder = entry.config;
      result.outcome = std::move(o);
      return result;
    }
  }
  result.outcome = result.attempts.back();
  return result;
}

PortfolioPlan read_plan(std::istream& in, const std::string& source) {
  PortfolioPlan plan;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string split, order, scope, budget;
    if (!(ls >> split)) continue;
    std::string extra;
    if (!(ls >> order >> scope >> budget) || (ls >> extra)) {
      throw DataError(source + ":" + std::to_string(line_no) +
                      ": expected 'split order scope budget'");
    }
    auto cfg = parse_config(split + "/" + order + "/" + scope);
    std::uint64_t b = 0;
    auto res = std::from_chars(budget.data(), budget.data() + budget.size(), b);
    if (!cfg || res.ec != std::errc() ||
        res.ptr != budget.data() + budget.size()) {
      throw DataError(source + ":" + std::to_string(line_no) +
                      ": bad plan entry");
    }
    plan.entries.push_back({*cfg, b});
  }
  if (plan.entries.empty()) throw DataError(source + ": plan has no entries");
  return plan;
}

void write_plan(std::ostream& out, const PortfolioPlan& plan) {
  for (const auto& e : plan.entries) {
    out << to_string(e.config.split) << ' ' << to_string(e.config.order) << ' '
        << to_string(e.config.scope) << ' ' << e.budget << '\n';
  }
}

// Records

bool RunRecord::complete() const {
  return std::all_of(results.begin(), results.end(),
                     [](const auto& r) { return r.has_value(); });
}

std::uint64_t RunRecord::cap() const {
  std::uint64_t c = std::numeric_limits<std::uint64_t>::max();
  for (const auto& r : results) {
    if (r) c = std::min(c, r->cap);
  }
  return c;
}

void write_records_csv(std::ostream& out,
                       const std::vector<RunRecord>& records) {
  out << "instance_id,split,order,scope,status,visited_nodes,cap\n";
  for (const auto& rec : records) {
    for (int id = 0; id < HeuristicConfig::kCount; ++id) {
      const auto& r = rec.results[id];
      if (!r) continue;
      HeuristicConfig c = HeuristicConfig::from_id(id);
      out << rec.instance_id << ',' << to_string(c.split) << ','
          << to_string(c.order) << ',' << to_string(c.scope) << ','
          << to_string(r->status) << ',' << r->visited_nodes << ',' << r->cap
          << '\n';
    }
  }
}

std::vector<RunRecord> read_records_csv(std::istream& in,
                                        const std::string& source) {
  CsvReader reader(in, source,
                   {"instance_id", "split", "order", "scope", "status",
                    "visited_nodes", "cap"});
  std::vector<RunRecord> records;
  std::map<std::string, std::size_t> index;
  while (auto row = reader.next()) {
    auto cfg = parse_config(row->at(1) + "/" + row->at(2) + "/" + row->at(3));
    if (!cfg) reader.fail("unknown heuristic");
    auto status = parse_status(row->at(4));
    if (!status) reader.fail("unknown status '" + row->at(4) + "'");
    ConfigResult r{*status, reader.to_u64(row->at(5)), reader.to_u64(row->at(6))};
    if (r.visited_nodes > r.cap) reader.fail("visited_nodes exceeds cap");
    auto [it, inserted] = index.emplace(row->at(0), records.size());
    if (inserted) {
      records.emplace_back();
      records.back().instance_id = row->at(0);
    }
    auto& slot = records[it->second].results[cfg->id()];
    if (slot) reader.fail("duplicate row for " + row->at(0));
    slot = r;
  }
  return records;
}

// Combinations

std::vector<HeuristicConfig> configs_in(ConfigMask mask) {
  std::vector<HeuristicConfig> out;
  for (int id = 0; id < HeuristicConfig::kCount; ++id) {
    if (mask >> id & 1u) out.push_back(HeuristicConfig::from_id(id));
  }
  return out;
}

std::string combination_name(ConfigMask mask) {
  std::string out;
  for (const auto& c : configs_in(mask)) {
    if (!out.empty()) out += '+';
    out += std::string(to_string(c.split)) + '-' + to_string(c.order)[0] +
           '-' + to_string(c.scope)[0];
  }
  return out;
}

namespace {

constexpr ConfigMask kAllMask = (1u << HeuristicConfig::kCount) - 1;

void check_records(const std::vector<RunRecord>& records,
                   std::uint64_t total_budget) {
  for (const auto& rec : records) {
    if (!rec.complete()) {
      throw std::invalid_argument("record " + rec.instance_id +
                                  " lacks some heuristics");
    }
    if (rec.cap() < total_budget) {
      throw std::invalid_argument("record " + rec.instance_id +
                                  " was capped below the budget");
    }
  }
}

// Per-config solved bitsets over instances, for one per-member budget.
class SolvedBits {
 public:
  SolvedBits(const std::vector<RunRecord>& records, std::uint64_t budget)
      : words_((records.size() + 63) / 64),
        bits_(static_cast<std::size_t>(HeuristicConfig::kCount) * words_, 0) {
    for (std::size_t k = 0; k < records.size(); ++k) {
      for (int id = 0; id < HeuristicConfig::kCount; ++id) {
        if (records[k].results[id]->solved_within(budget)) {
          bits_[id * words_ + k / 64] |= std::uint64_t{1} << (k % 64);
        }
      }
    }
  }

  std::size_t count(ConfigMask mask, std::vector<std::uint64_t>& scratch) const {
    scratch.assign(words_, 0);
    for (ConfigMask m = mask; m != 0; m &= m - 1) {
      const std::uint64_t* row = &bits_[std::countr_zero(m) * words_];
      for (std::size_t w = 0; w < words_; ++w) scratch[w] |= row[w];
    }
    std::size_t total = 0;
    for (std::uint64_t w : scratch) total += std::popcount(w);
    return total;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// Smaller subsets first, then the lexicographically smaller id list.
bool preferred(ConfigMask a, ConfigMask b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  ConfigMask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

}  // namespace

std::size_t solved_by(const std::vector<RunRecord>& records, ConfigMask mask,
                      std::uint64_t total_budget) {
  if (mask == 0 || (mask & ~kAllMask) != 0) {
    throw std::invalid_argument("bad heuristic subset");
  }
  const std::uint64_t each = total_budget / std::popcount(mask);
  std::size_t solved = 0;
  for (const auto& rec : records) {
    for (ConfigMask m = mask; m != 0; m &= m - 1) {
      const auto& r = rec.results[std::countr_zero(m)];
      if (!r) throw std::invalid_argument("incomplete record");
      if (r->solved_within(each)) {
        ++solved;
        break;
      }
    }
  }
  return solved;
}

CombinationResult optimize_combination(const std::vector<RunRecord>& records,
                                       std::uint64_t total_budget) {
  check_records(records, total_budget);
  std::vector<SolvedBits> by_size;
  by_size.reserve(HeuristicConfig::kCount);
  for (int k = 1; k <= HeuristicConfig::kCount; ++k) {
    by_size.emplace_back(records, total_budget / k);
  }
  CombinationResult best{total_budget, 0, 0};
  std::vector<std::uint64_t> scratch;
  for (ConfigMask mask = 1; mask <= kAllMask; ++mask) {
    std::size_t solved = by_size[std::popcount(mask) - 1].count(mask, scratch);
    if (best.best == 0 || solved > best.solved ||
        (solved == best.solved && preferred(mask, best.best))) {
      best.best = mask;
      best.solved = solved;
    }
  }
  return best;
}

std::vector<CombinationResult> optimize_combination(
    const std::vector<RunRecord>& records,
    const std::vector<std::uint64_t>& budgets) {
  std::vector<CombinationResult> out;
  out.reserve(budgets.size());
  for (std::uint64_t b : budgets) out.push_back(optimize_combination(records, b));
  return out;
}

std::vector<FirstResponseRow> first_response_table(
    const std::vector<RunRecord>& records) {
  if (records.empty()) throw std::invalid_argument("no records");
  std::array<std::size_t, HeuristicConfig::kCount> solved{}, first{};
  for (const auto& rec : records) {
    if (!rec.complete()) {
      throw std::invalid_argument("record " + rec.instance_id +
                                  " lacks some heuristics");
    }
    std::uint64_t fastest = std::numeric_limits<std::uint64_t>::max();
    for (const auto& r : rec.results) {
      if (r->status != SolveStatus::BudgetExhausted) {
        fastest = std::min(fastest, r->visited_nodes);
      }
    }
    for (int id = 0; id < HeuristicConfig::kCount; ++id) {
      const auto& r = rec.results[id];
      if (r->status == SolveStatus::BudgetExhausted) continue;
      ++solved[id];
      if (r->visited_nodes == fastest) ++first[id];
    }
  }
  std::vector<FirstResponseRow> rows;
  const double n = static_cast<double>(records.size());
  for (int id = 0; id < HeuristicConfig::kCount; ++id) {
    rows.push_back({HeuristicConfig::from_id(id), 100.0 * solved[id] / n,
                    100.0 * first[id] / n});
  }
  return rows;
}

}  // namespace rcc8
