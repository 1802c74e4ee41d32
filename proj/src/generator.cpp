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

#include "rcc8/generator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "rcc8/subclasses.hpp"

namespace rcc8 {

std::string_view to_string(Model m) { return m == Model::A ? "A" : "H"; }

std::optional<Model> parse_model(std::string_view text) {
  if (text == "A") return Model::A;
  if (text == "H") return Model::H;
  return std::nullopt;
}

std::size_t edge_count(const GenSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("n must be at least 2");
  if (!(spec.d > 0.0) || spec.d > spec.n - 1) {
    throw std::invalid_argument("d must lie in (0, n-1]");
  }
  if (!(spec.l >= 1.0) || spec.l > 8.0) {
    throw std::invalid_argument("l must lie in [1, 8]");
  }
  // nearbyint under the default rounding mode rounds ties to even.
  double e = std::nearbyint(spec.n * spec.d / 2.0);
  double max_edges = spec.n * (spec.n - 1.0) / 2.0;
  if (e > max_edges) throw std::invalid_argument("too many edges for n");
  return static_cast<std::size_t>(e);
}

Relation draw_label(double l, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, kNumBases - 1);
  std::bernoulli_distribution extra((l - 1.0) / 7.0);
  const int chosen = pick(rng);
  Relation r(kAllBases[chosen]);
  for (int b = 0; b < kNumBases; ++b) {
    if (b == chosen) continue;
    if (extra(rng)) r = r | Relation(kAllBases[b]);
  }
  return r;
}

bool label_allowed(Model model, Relation r) {
  if (r.is_empty() || r.is_universal()) return false;
  return model == Model::A || in_np8(r);
}

Relation sample_label(Model model, double l, std::mt19937_64& rng) {
  for (;;) {
    Relation r = draw_label(l, rng);
    if (label_allowed(model, r)) return r;
  }
}

Instance generate(const GenSpec& spec) {
  const std::size_t edges = edge_count(spec);
  const int n = spec.n;
  std::mt19937_64 rng(spec.seed);

  std::vector<std::uint32_t> all(static_cast<std::size_t>(n) * (n - 1) / 2);
  std::iota(all.begin(), all.end(), 0u);
  std::vector<std::uint32_t> chosen;
  chosen.reserve(edges);
  std::sample(all.begin(), all.end(), std::back_inserter(chosen), edges, rng);

  // Pair index -> (i, j), i < j, in row-major order of the upper triangle.
  std::vector<std::uint32_t> row_start(n);
  for (int i = 0, acc = 0; i < n; ++i) {
    row_start[i] = static_cast<std::uint32_t>(acc);
    acc += n - 1 - i;
  }

  Instance inst;
  inst.network = Network(n);
  inst.model = std::string(to_string(spec.model));
  inst.d = spec.d;
  inst.l = spec.l;
  inst.seed = spec.seed;
  inst.comments.emplace_back(kGeneratorTag);
  for (std::uint32_t idx : chosen) {
    int i = static_cast<int>(
        std::upper_bound(row_start.begin(), row_start.end(), idx) -
        row_start.begin() - 1);
    int j = i + 1 + static_cast<int>(idx - row_start[i]);
    inst.network.set(i, j, sample_label(spec.model, spec.l, rng));
  }
  return inst;
}

TripleCensus count_inconsistent_triples(const RelationAlgebra& algebra) {
  // feasible13[b12][b23]: the bases b13 that close a consistent base
  // triangle with b12 and b23, checked at all three corners.
  std::array<std::array<std::uint8_t, kNumBases>, kNumBases> feasible13{};
  for (Base b12 : kAllBases) {
    for (Base b23 : kAllBases) {
      std::uint8_t mask = 0;
      for (Base b13 : kAllBases) {
        Relation r12(b12), r23(b23), r13(b13);
        bool ok = algebra.compose(r12, r23).intersects(r13) &&
                  algebra.compose(r13, converse(r23)).intersects(r12) &&
                  algebra.compose(converse(r12), r13).intersects(r23);
        if (ok) mask |= Relation(b13).mask();
      }
      feasible13[static_cast<int>(b12)][static_cast<int>(b23)] = mask;
    }
  }
  TripleCensus census;
  for (int r12 = 1; r12 < kNumRelations; ++r12) {
    for (int r23 = 1; r23 < kNumRelations; ++r23) {
      std::uint8_t reachable = 0;
      Relation(static_cast<std::uint8_t>(r12)).for_each([&](Base a) {
        Relation(static_cast<std::uint8_t>(r23)).for_each([&](Base b) {
          reachable |= feasible13[static_cast<int>(a)][static_cast<int>(b)];
        });
      });
      for (int r13 = 1; r13 < kNumRelations; ++r13) {
        census.inconsistent += (r13 & reachable) == 0;
      }
    }
  }
  census.total = 255ull * 255ull * 255ull;
  return census;
}

namespace {

double choose3(double x) { return x * (x - 1.0) * (x - 2.0) / 6.0; }

}  // namespace

double expected_connected_triples(std::optional<int> n, double d) {
  if (!n) return d * d * d / 6.0;
  const double nn = *n;
  return choose3(nn) * choose3(nn * d / 2.0) / choose3(nn * (nn - 1.0) / 2.0);
}

double solve_degree_threshold(std::optional<int> n, double target_eit,
                              double p_inconsistent) {
  if (!(target_eit > 0.0) || !(p_inconsistent > 0.0)) {
    throw std::invalid_argument("target and probability must be positive");
  }
  if (!n) return std::cbrt(6.0 * target_eit / p_inconsistent);
  if (*n < 3) throw std::invalid_argument("n must be at least 3");
  auto excess = [&](double d) {
    return expected_connected_triples(n, d) * p_inconsistent - target_eit;
  };
  // E_CT is increasing once nd/2 >= 2, i.e. d >= 4/n.
  double lo = 4.0 / *n;
  double hi = *n - 1.0;
  if (excess(hi) < 0.0) {
    throw std::invalid_argument("target not reachable for this n");
  }
  auto [a, b] = boost::math::tools::bisect(
      excess, lo, hi, boost::math::tools::eps_tolerance<double>(50));
  return 0.5 * (a + b);
}

}  // namespace rcc8
