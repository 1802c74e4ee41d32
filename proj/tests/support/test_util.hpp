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

#ifndef RCC8_TESTS_TEST_UTIL_HPP_
#define RCC8_TESTS_TEST_UTIL_HPP_

#include <random>
#include <vector>

#include "rcc8/network.hpp"
#include "rcc8/relation.hpp"

namespace rcc8::testing {

inline Relation random_relation(std::mt19937_64& rng, bool allow_empty = true) {
  std::uniform_int_distribution<int> pick(allow_empty ? 0 : 1, 255);
  return Relation(static_cast<std::uint8_t>(pick(rng)));
}

// Every pair constrained with probability `density`, labels drawn from
// `pool` (uniformly).
inline Network random_network(int n, double density,
                              const std::vector<Relation>& pool,
                              std::mt19937_64& rng) {
  Network net(n);
  std::bernoulli_distribution use(density);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (use(rng)) net.set(i, j, pool[pick(rng)]);
    }
  }
  return net;
}

inline std::vector<Relation> all_nonempty() {
  std::vector<Relation> out;
  for (int m = 1; m < 256; ++m) out.emplace_back(static_cast<std::uint8_t>(m));
  return out;
}

inline Relation rel(std::initializer_list<Base> bases) {
  Relation r;
  for (Base b : bases) r = r | Relation(b);
  return r;
}

}  // namespace rcc8::testing

#endif  // RCC8_TESTS_TEST_UTIL_HPP_
