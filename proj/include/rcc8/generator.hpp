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

#ifndef RCC8_GENERATOR_HPP_
#define RCC8_GENERATOR_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "rcc8/algebra.hpp"
#include "rcc8/network.hpp"

namespace rcc8 {

// A: labels drawn from all relations. H: labels restricted to NP8.
enum class Model { A, H };

std::string_view to_string(Model m);
std::optional<Model> parse_model(std::string_view text);

struct GenSpec {
  Model model = Model::A;
  int n = 0;
  double d = 0.0;  // average degree
  double l = 4.0;  // average label size
  std::uint64_t seed = 0;
};

// Name recorded in every generated instance file.
inline constexpr std::string_view kGeneratorTag = "generator=mt19937_64/v1";

// round(n*d/2), ties to even. Throws std::invalid_argument on an invalid
// spec (n < 2, d outside (0, n-1], l outside [1, 8], too many edges).
std::size_t edge_count(const GenSpec& spec);

// One draw of the label procedure before any rejection: a uniformly chosen
// base plus each of the other seven with probability (l-1)/7.
Relation draw_label(double l, std::mt19937_64& rng);

// Repeats draw_label until the label is allowed for the model. The
// universal relation is never allowed, so every selected edge is
// constrained and the realized degree is exact.
Relation sample_label(Model model, double l, std::mt19937_64& rng);

bool label_allowed(Model model, Relation r);

Instance generate(const GenSpec& spec);

// Ordered triples (R12, R13, R23) of non-empty relations that admit no
// compatible choice of base relations, counted over all 255^3 triples.
struct TripleCensus {
  std::uint64_t inconsistent = 0;
  std::uint64_t total = 0;
  double probability() const {
    return static_cast<double>(inconsistent) / static_cast<double>(total);
  }
};

TripleCensus count_inconsistent_triples(const RelationAlgebra& algebra);

// Expected number of connected triples carrying three constrained edges:
//   C(n,3) * C(nd/2,3) / C(n(n-1)/2,3), with C(x,3) = x(x-1)(x-2)/6 for
// non-integer x. An absent n means the n -> infinity limit d^3/6.
double expected_connected_triples(std::optional<int> n, double d);

// d at which expected_connected_triples(n, d) * p_inconsistent == target.
double solve_degree_threshold(std::optional<int> n, double target_eit,
                              double p_inconsistent);

}  // namespace rcc8

#endif  // RCC8_GENERATOR_HPP_
