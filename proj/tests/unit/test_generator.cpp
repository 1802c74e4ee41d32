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

#include <bit>
#include <cmath>
#include <random>

#include "brute_force.hpp"
#include "doctest.h"
#include "rcc8/generator.hpp"
#include "rcc8/subclasses.hpp"
#include "test_util.hpp"

using namespace rcc8;

namespace {

const RelationAlgebra& alg() { return RelationAlgebra::standard(); }

// Test-side census through the closed form: for each (R12, R23) the
// inconsistent R13 are exactly the non-empty subsets of the complement of
// R12 o R23.
std::uint64_t closed_form_census() {
  testing::BruteForce oracle(CompositionTable::standard());
  std::uint64_t total = 0;
  for (int a = 1; a < 256; ++a) {
    for (int b = 1; b < 256; ++b) {
      int c = std::popcount(oracle.compose_mask(a, b));
      total += (std::uint64_t{1} << (8 - c)) - 1;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("edge counts") {
  CHECK(edge_count({Model::A, 10, 3.0, 4.0, 0}) == 15);
  CHECK(edge_count({Model::A, 5, 3.0, 4.0, 0}) == 8);   // 7.5 -> 8
  CHECK(edge_count({Model::A, 5, 1.0, 4.0, 0}) == 2);   // 2.5 -> 2
  CHECK(edge_count({Model::A, 7, 1.0, 4.0, 0}) == 4);   // 3.5 -> 4
  CHECK(edge_count({Model::A, 6, 5.0, 4.0, 0}) == 15);  // complete graph
  CHECK_THROWS_AS(edge_count({Model::A, 6, 5.5, 4.0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(edge_count({Model::A, 1, 0.5, 4.0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(edge_count({Model::A, 10, 0.0, 4.0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(edge_count({Model::A, 10, 3.0, 9.0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(edge_count({Model::A, 10, 3.0, 0.5, 0}), std::invalid_argument);
}

TEST_CASE("generated instances") {
  for (Model m : {Model::A, Model::H}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      GenSpec spec{m, 25, 7.5, 4.0, seed};
      Instance inst = generate(spec);
      CHECK(inst.network.constrained_edges() == edge_count(spec));
      CHECK(inst.network.well_formed());
      for (int i = 0; i < 25; ++i) {
        for (int j = i + 1; j < 25; ++j) {
          Relation r = inst.network.at(i, j);
          if (r.is_universal()) continue;
          CHECK_FALSE(r.is_empty());
          if (m == Model::H) CHECK(in_np8(r));
        }
      }
      CHECK(write_instance(generate(spec)) == write_instance(inst));
      CHECK(inst.comments.at(0) == kGeneratorTag);
    }
  }
  CHECK(write_instance(generate({Model::A, 25, 7.5, 4.0, 1})) !=
        write_instance(generate({Model::A, 25, 7.5, 4.0, 2})));
}

TEST_CASE("label distribution") {
  std::mt19937_64 rng(41);
  const int draws = 100000;
  std::array<int, 8> seen{};
  double raw_size = 0, model_a_size = 0;
  for (int k = 0; k < draws; ++k) {
    Relation r = draw_label(4.0, rng);
    raw_size += r.size();
    for (int b = 0; b < 8; ++b) seen[b] += r.contains(static_cast<Base>(b));
    model_a_size += sample_label(Model::A, 4.0, rng).size();
  }
  CHECK(std::abs(raw_size / draws - 4.0) <= 0.05);
  CHECK(std::abs(model_a_size / draws - 4.0) <= 0.05);
  for (int b = 0; b < 8; ++b) {
    CHECK(std::abs(seen[b] / static_cast<double>(draws) - 0.5) <= 0.01);
  }
  // l = 1 gives single base relations only.
  for (int k = 0; k < 1000; ++k) CHECK(draw_label(1.0, rng).size() == 1);
  CHECK_FALSE(label_allowed(Model::A, Relation::universal()));
  CHECK_FALSE(label_allowed(Model::H, Relation(Base::DC)));
}

TEST_CASE("triple census") {
  TripleCensus c = count_inconsistent_triples(alg());
  CHECK(c.total == 16581375);
  CHECK(c.inconsistent == 58989);
  CHECK(c.inconsistent == closed_form_census());
  CHECK(c.probability() == doctest::Approx(58989.0 / 16581375.0));
  // A universal R13 never conflicts: every composition is non-empty.
  for (int a = 1; a < 256; ++a) {
    for (int b = 1; b < 256; ++b) {
      CHECK_FALSE(alg().compose(Relation(static_cast<std::uint8_t>(a)),
                                Relation(static_cast<std::uint8_t>(b)))
                      .is_empty());
    }
  }
}

TEST_CASE("connected triple expectations") {
  for (double d : {2.0, 8.0, 12.0}) {
    double limit = expected_connected_triples(std::nullopt, d);
    CHECK(limit == doctest::Approx(d * d * d / 6.0));
    double big = expected_connected_triples(1000000, d);
    CHECK(std::abs(big / limit - 1.0) < 1e-3);
  }
  const double p = 58989.0 / 16581375.0;
  CHECK(std::abs(solve_degree_threshold(std::nullopt, 1.0, p) - 11.90) <= 0.05);
  CHECK(std::abs(solve_degree_threshold(std::nullopt, 0.5, p) - 9.44) <= 0.05);
  // Independent root-find of the finite-n expression (scipy brentq).
  CHECK(std::abs(solve_degree_threshold(100, 1.0, p) - 11.9213) <= 0.001);
  CHECK(std::abs(solve_degree_threshold(100, 0.5, p) - 9.4661) <= 0.001);
  double d = solve_degree_threshold(100, 1.0, p);
  CHECK(expected_connected_triples(100, d) * p == doctest::Approx(1.0));
  CHECK_THROWS_AS(solve_degree_threshold(10, 1e9, p), std::invalid_argument);
  CHECK_THROWS_AS(solve_degree_threshold(100, 0.0, p), std::invalid_argument);
}

TEST_CASE("model H instances have no locally inconsistent triple") {
  testing::BruteForce oracle(CompositionTable::standard());
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 10000; ++seed) {
    Instance inst = generate({Model::H, 40, 12.0, 4.0, seed});
    const Network& net = inst.network;
    for (int i = 0; i < 40 && checked < 10000; ++i) {
      for (int j = i + 1; j < 40 && checked < 10000; ++j) {
        if (net.at(i, j).is_universal()) continue;
        for (int k = j + 1; k < 40 && checked < 10000; ++k) {
          if (net.at(i, k).is_universal() || net.at(j, k).is_universal()) continue;
          Network tri(3);
          tri.set(0, 1, net.at(i, j));
          tri.set(0, 2, net.at(i, k));
          tri.set(1, 2, net.at(j, k));
          CHECK(oracle.consistent(tri));
          ++checked;
        }
      }
    }
  }
}
