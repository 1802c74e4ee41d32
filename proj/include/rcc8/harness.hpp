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

#ifndef RCC8_HARNESS_HPP_
#define RCC8_HARNESS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcc8/generator.hpp"
#include "rcc8/portfolio.hpp"
#include "rcc8/solver.hpp"

namespace rcc8 {

// Element at 1-indexed position ceil(p/100 * N) of the ascending sort.
template <typename T>
T percentile(std::vector<T> values, double p) {
  if (values.empty()) throw std::invalid_argument("percentile of empty list");
  if (!(p > 0.0) || p > 100.0) throw std::invalid_argument("p outside (0, 100]");
  std::sort(values.begin(), values.end());
  auto rank = static_cast<std::size_t>(
      std::ceil(p / 100.0 * static_cast<double>(values.size())));
  rank = std::clamp<std::size_t>(rank, 1, values.size());
  return values[rank - 1];
}

// Stable per-instance seed from the sweep coordinates. d enters at
// millidegree resolution so grid points computed in floating point agree.
std::uint64_t instance_seed(std::uint64_t base, Model model, int n, double d,
                            int index);

// Grid start, start + step, ... up to stop (inclusive within step/1000).
std::vector<double> degree_grid(double start, double stop, double step);

struct SweepConfig {
  Model model = Model::A;
  std::vector<int> ns;
  double d_start = 0.0;
  double d_stop = 0.0;
  double d_step = 0.5;
  double l = 4.0;
  int instances = 10;
  std::vector<HeuristicConfig> configs;
  std::uint64_t cap = 10000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  SolverOptions solver;

  void validate() const;
};

inline constexpr std::array<int, 3> kPercentiles = {50, 70, 99};

struct DataPoint {
  std::string model;
  int n = 0;
  double d = 0.0;
  double l = 0.0;
  int count = 0;
  std::string config;
  // Consistent fraction among decided instances; NaN when none decided.
  double p_sat = 0.0;
  int undecided = 0;
  std::array<std::uint64_t, 3> nodes{};  // at kPercentiles
  std::array<double, 3> millis{};
  // Instances on which this config ran out of nodes at the cap.
  int hard_count = 0;

  friend bool operator==(const DataPoint&, const DataPoint&) = default;
};

// Outcome of one (instance, config) task.
struct TaskResult {
  int n = 0;
  double d = 0.0;
  int index = 0;
  std::uint64_t seed = 0;
  int config = 0;  // HeuristicConfig::id()
  SolveStatus status = SolveStatus::BudgetExhausted;
  std::uint64_t nodes = 0;
  double millis = 0.0;
};

// Generates every instance of the grid and solves it with every config on a
// pool of cfg.workers threads. Results come back ordered by (n, d, index,
// config) no matter how the work was scheduled. The optional callback sees
// each generated instance before it is solved.
std::vector<TaskResult> run_grid(
    const SweepConfig& cfg,
    const std::function<void(const Instance&, int n, double d, int index)>&
        on_instance = {});

std::vector<DataPoint> aggregate(const SweepConfig& cfg,
                                 const std::vector<TaskResult>& results);

std::vector<DataPoint> sweep(const SweepConfig& cfg);

// model,n,d,l,count,config,p_sat,undecided,nodes_p50,...,ms_p99,hard_count
void write_sweep_csv(std::ostream& out, const std::vector<DataPoint>& points);
std::vector<DataPoint> read_sweep_csv(std::istream& in,
                                      const std::string& source);

// d where p_sat first falls to 0.5 or below, linearly interpolated between
// grid points; NaN if it never does. Points must share n and config.
double crossover_degree(std::vector<DataPoint> points);

struct HardEntry {
  std::string instance_file;
  int n = 0;
  double d = 0.0;
  std::uint64_t seed = 0;
  // Visited nodes per config id; cap + 1 marks an exhausted run.
  std::array<std::uint64_t, HeuristicConfig::kCount> nodes{};
};

struct HardSet {
  std::uint64_t threshold = 10000;
  std::vector<HardEntry> entries;
  std::vector<RunRecord> records;
};

// Solves the corpus described by cfg with all 20 heuristics at cap
// cfg.cap and keeps the instances where at least one heuristic ran out.
// When out_dir is non-empty, writes the instance files, manifest.csv and
// records.csv there.
HardSet collect_hard(SweepConfig cfg, const std::filesystem::path& out_dir);

// instance_file,n,d,seed,nodes_<split>_<order>_<scope> x 20
void write_hard_manifest(std::ostream& out, const HardSet& set);
HardSet read_hard_manifest(std::istream& in, const std::string& source,
                           std::uint64_t threshold);

// Writes sweep.csv plus, when points exist, p_sat.svg and nodes.svg into
// dir. Returns the paths written.
std::vector<std::filesystem::path> write_report(
    const std::vector<DataPoint>& points, const std::filesystem::path& dir);

}  // namespace rcc8

#endif  // RCC8_HARNESS_HPP_
