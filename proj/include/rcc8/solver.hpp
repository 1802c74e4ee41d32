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

#ifndef RCC8_SOLVER_HPP_
#define RCC8_SOLVER_HPP_

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcc8/algebra.hpp"
#include "rcc8/network.hpp"
#include "rcc8/subclasses.hpp"

namespace rcc8 {

enum class Ordering { Static, Dynamic };
enum class Scope { Local, Global };

std::string_view to_string(Ordering o);
std::string_view to_string(Scope s);
std::optional<Ordering> parse_ordering(std::string_view text);
std::optional<Scope> parse_scope(std::string_view text);

struct HeuristicConfig {
  SplitSetId split = SplitSetId::H8;
  Ordering order = Ordering::Dynamic;
  Scope scope = Scope::Local;

  static constexpr int kCount = 20;

  // Dense index 0..19: split-major, then order, then scope.
  int id() const {
    return static_cast<int>(split) * 4 + static_cast<int>(order) * 2 +
           static_cast<int>(scope);
  }
  static HeuristicConfig from_id(int id);

  friend bool operator==(const HeuristicConfig&,
                         const HeuristicConfig&) = default;
};

const std::array<HeuristicConfig, HeuristicConfig::kCount>& all_configs();

// "H8/dynamic/local".
std::string to_string(const HeuristicConfig& c);
// "H8_dynamic_local", used for CSV column names.
std::string column_name(const HeuristicConfig& c);
// Accepts either of the two forms above.
std::optional<HeuristicConfig> parse_config(std::string_view text);

enum class SolveStatus { Consistent, Inconsistent, BudgetExhausted };

std::string_view to_string(SolveStatus s);
std::optional<SolveStatus> parse_status(std::string_view text);

struct SolveOutcome {
  SolveStatus status = SolveStatus::BudgetExhausted;
  std::uint64_t visited_nodes = 0;
  std::chrono::duration<double, std::milli> wall_time{0};
  HeuristicConfig heuristic;
  std::uint64_t budget = 0;
  // The leaf network when status is Consistent: path-consistent with every
  // edge inside the split set.
  std::optional<Network> solution;

  bool decided() const { return status != SolveStatus::BudgetExhausted; }
};

struct ConstrainednessScore {
  int i = 0;
  int j = 0;
  int decomposition_size = 0;
  int weight = 0;
  // Only filled for the global scope; -1 otherwise.
  std::int64_t neighborhood_sum = -1;
};

ConstrainednessScore local_score(const Network& net, int i, int j,
                                 const SplitSet& split, const WeightTable& w);

// weight(M[i][j]) + sum over z not in {i, j} of
// weight(M[i][z]) + weight(M[z][j]).
ConstrainednessScore global_score(const Network& net, int i, int j,
                                  const SplitSet& split, const WeightTable& w);

// True when a should be branched on before b. Local: (size, weight, i, j).
// Global: (neighborhood sum, i, j).
bool more_constrained(const ConstrainednessScore& a,
                      const ConstrainednessScore& b, Scope scope);

// Picks the next edge to branch on, or nothing at a leaf.
class EdgeSelector {
 public:
  EdgeSelector(HeuristicConfig cfg, const SplitSet& split,
               const WeightTable& weights);

  // Freezes the static order from the current network. No-op for dynamic.
  void initialize(const Network& net);
  std::optional<std::pair<int, int>> select(const Network& net);

 private:
  std::optional<std::pair<int, int>> select_dynamic(const Network& net);

  HeuristicConfig cfg_;
  const SplitSet& split_;
  const WeightTable& weights_;
  std::vector<std::pair<int, int>> static_order_;
  std::vector<std::int64_t> row_sum_;
  std::vector<std::int64_t> col_sum_;
};

struct SolverOptions {
  QueueDiscipline discipline = QueueDiscipline::ExactWeighted;
  WeightKind heuristic_weights = WeightKind::Exact;
  PcOptions pc;
};

// Backtracking over split-set decompositions with path-consistency as
// forward checking. The root call is node 1; each branch into a
// decomposition part is one more node.
class Solver {
 public:
  Solver(const RelationAlgebra& algebra, HeuristicConfig cfg,
         SolverOptions options = {});

  SolveOutcome solve(Network net, std::uint64_t budget);

  const HeuristicConfig& config() const { return cfg_; }

 private:
  const RelationAlgebra& algebra_;
  HeuristicConfig cfg_;
  SolverOptions options_;
  const SplitSet& split_;
  PathConsistency pc_;
};

// Convenience wrapper using the standard algebra.
SolveOutcome solve(const Network& net, HeuristicConfig cfg,
                   std::uint64_t budget, SolverOptions options = {});

}  // namespace rcc8

#endif  // RCC8_SOLVER_HPP_
