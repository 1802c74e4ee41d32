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

#include "rcc8/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace rcc8 {

std::string_view to_string(Ordering o) {
  return o == Ordering::Static ? "static" : "dynamic";
}

std::string_view to_string(Scope s) {
  return s == Scope::Local ? "local" : "global";
}

std::optional<Ordering> parse_ordering(std::string_view text) {
  if (text == "static" || text == "s") return Ordering::Static;
  if (text == "dynamic" || text == "d") return Ordering::Dynamic;
  return std::nullopt;
}

std::optional<Scope> parse_scope(std::string_view text) {
  if (text == "local" || text == "l") return Scope::Local;
  if (text == "global" || text == "g") return Scope::Global;
  return std::nullopt;
}

HeuristicConfig HeuristicConfig::from_id(int id) {
  if (id < 0 || id >= kCount) throw std::out_of_range("heuristic id");
  return HeuristicConfig{kAllSplitSets[id / 4],
                         static_cast<Ordering>((id / 2) % 2),
                         static_cast<Scope>(id % 2)};
}

const std::array<HeuristicConfig, HeuristicConfig::kCount>& all_configs() {
  static const auto configs = [] {
    std::array<HeuristicConfig, HeuristicConfig::kCount> out;
    for (int id = 0; id < HeuristicConfig::kCount; ++id) {
      out[id] = HeuristicConfig::from_id(id);
    }
    return out;
  }();
  return configs;
}

std::string to_string(const HeuristicConfig& c) {
  return std::string(to_string(c.split)) + "/" +
         std::string(to_string(c.order)) + "/" +
         std::string(to_string(c.scope));
}

std::string column_name(const HeuristicConfig& c) {
  return std::string(to_string(c.split)) + "_" +
         std::string(to_string(c.order)) + "_" +
         std::string(to_string(c.scope));
}

std::optional<HeuristicConfig> parse_config(std::string_view text) {
  std::array<std::string_view, 3> parts;
  std::size_t k = 0;
  while (k < 3) {
    std::size_t cut = text.find_first_of("/_");
    parts[k++] = text.substr(0, cut);
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
    if (k == 3) return std::nullopt;  // trailing fields
  }
  if (k != 3) return std::nullopt;
  auto split = parse_split_set(parts[0]);
  auto order = parse_ordering(parts[1]);
  auto scope = parse_scope(parts[2]);
  if (!split || !order || !scope) return std::nullopt;
  return HeuristicConfig{*split, *order, *scope};
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Consistent: return "consistent";
    case SolveStatus::Inconsistent: return "inconsistent";
    case SolveStatus::BudgetExhausted: return "exhausted";
  }
  return "?";
}

std::optional<SolveStatus> parse_status(std::string_view text) {
  if (text == "consistent") return SolveStatus::Consistent;
  if (text == "inconsistent") return SolveStatus::Inconsistent;
  if (text == "exhausted") return SolveStatus::BudgetExhausted;
  return std::nullopt;
}

// Scores

ConstrainednessScore local_score(const Network& net, int i, int j,
                                 const SplitSet& split, const WeightTable& w) {
  Relation r = net.at(i, j);
  return ConstrainednessScore{i, j, split.decomposition_size(r), w.weight(r),
                              -1};
}

ConstrainednessScore global_score(const Network& net, int i, int j,
                                  const SplitSet& split, const WeightTable& w) {
  ConstrainednessScore s = local_score(net, i, j, split, w);
  std::int64_t sum = s.weight;
  for (int z = 0; z < net.size(); ++z) {
    if (z == i || z == j) continue;
    sum += w.weight(net.at(i, z)) + w.weight(net.at(z, j));
  }
  s.neighborhood_sum = sum;
  return s;
}

bool more_constrained(const ConstrainednessScore& a,
                      const ConstrainednessScore& b, Scope scope) {
  if (scope == Scope::Local) {
    return std::tie(a.decomposition_size, a.weight, a.i, a.j) <
           std::tie(b.decomposition_size, b.weight, b.i, b.j);
  }
  return std::tie(a.neighborhood_sum, a.i, a.j) <
         std::tie(b.neighborhood_sum, b.i, b.j);
}

// EdgeSelector

EdgeSelector::EdgeSelector(HeuristicConfig cfg, const SplitSet& split,
                           const WeightTable& weights)
    : cfg_(cfg), split_(split), weights_(weights) {}

void EdgeSelector::initialize(const Network& net) {
  static_order_.clear();
  if (cfg_.order != Ordering::Static) return;
  const int n = net.size();
  std::vector<ConstrainednessScore> scores;
  scores.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      scores.push_back(cfg_.scope == Scope::Local
                           ? local_score(net, i, j, split_, weights_)
                           : global_score(net, i, j, split_, weights_));
    }
  }
  std::sort(scores.begin(), scores.end(),
            [&](const auto& a, const auto& b) {
              return more_constrained(a, b, cfg_.scope);
            });
  static_order_.reserve(scores.size());
  for (const auto& s : scores) static_order_.emplace_back(s.i, s.j);
}

std::optional<std::pair<int, int>> EdgeSelector::select(const Network& net) {
  if (cfg_.order == Ordering::Dynamic) return select_dynamic(net);
  // The order is frozen; an edge is skipped while its current relation is
  // inside the split set.
  for (auto [i, j] : static_order_) {
    if (!split_.contains(net.at(i, j))) return std::make_pair(i, j);
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> EdgeSelector::select_dynamic(
    const Network& net) {
  const int n = net.size();
  if (cfg_.scope == Scope::Global) {
    row_sum_.assign(n, 0);
    col_sum_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        int w = weights_.weight(net.at(a, b));
        row_sum_[a] += w;
        col_sum_[b] += w;
      }
    }
  }
  std::optional<ConstrainednessScore> best;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Relation r = net.at(i, j);
      if (split_.contains(r)) continue;
      ConstrainednessScore s{i, j, split_.decomposition_size(r),
                             weights_.weight(r), -1};
      if (cfg_.scope == Scope::Global) {
        // Row i without M[i][j], column j without M[i][j], plus M[i][j].
        s.neighborhood_sum = row_sum_[i] + col_sum_[j] - s.weight;
      }
      if (!best || more_constrained(s, *best, cfg_.scope)) best = s;
    }
  }
  if (!best) return std::nullopt;
  return std::make_pair(best->i, best->j);
}

// Solver

Solver::Solver(const RelationAlgebra& algebra, HeuristicConfig cfg,
               SolverOptions options)
    : algebra_(algebra),
      cfg_(cfg),
      options_(options),
      split_(SplitSet::standard(cfg.split)),
      pc_(algebra, options.discipline, options.pc) {}

SolveOutcome Solver::solve(Network net, std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome out;
  out.heuristic = cfg_;
  out.budget = budget;
  auto finish = [&](SolveStatus status) {
    out.status = status;
    out.wall_time = std::chrono::steady_clock::now() - start;
    if (status == SolveStatus::Consistent) out.solution = std::move(net);
    return std::move(out);
  };

  if (!net.well_formed()) throw std::invalid_argument("malformed network");
  if (budget < 1) return finish(SolveStatus::BudgetExhausted);
  out.visited_nodes = 1;
  if (pc_.enforce(net).failed()) return finish(SolveStatus::Inconsistent);

  EdgeSelector selector(cfg_, split_, algebra_.weights(options_.heuristic_weights));
  selector.initialize(net);

  struct Frame {
    int i;
    int j;
    Relation original;
    std::size_t next_child;
    Trail::Mark mark;
  };
  std::vector<Frame> stack;
  Trail trail;

  auto branch_point = [&]() {
    auto edge = selector.select(net);
    if (!edge) return false;
    auto [i, j] = *edge;
    stack.push_back(Frame{i, j, net.at(i, j), 0, trail.mark()});
    return true;
  };

  if (!branch_point()) return finish(SolveStatus::Consistent);

  while (!stack.empty()) {
    Frame& f = stack.back();
    trail.undo_to(net, f.mark);
    std::span<const Relation> parts = split_.decompose(f.original);
    if (f.next_child == parts.size()) {
      stack.pop_back();
      continue;
    }
    Relation part = parts[f.next_child++];
    if (out.visited_nodes + 1 > budget) {
      return finish(SolveStatus::BudgetExhausted);
    }
    ++out.visited_nodes;
    const int i = f.i;
    const int j = f.j;
    if (part != f.original) {
      trail.record(i, j, f.original);
      net.set(i, j, part);
    }
    if (pc_.propagate(net, i, j, &trail).failed()) continue;
    if (!branch_point()) return finish(SolveStatus::Consistent);
  }
  return finish(SolveStatus::Inconsistent);
}

SolveOutcome solve(const Network& net, HeuristicConfig cfg,
                   std::uint64_t budget, SolverOptions options) {
  Solver solver(RelationAlgebra::standard(), cfg, options);
  return solver.solve(net, budget);
}

}  // namespace rcc8
