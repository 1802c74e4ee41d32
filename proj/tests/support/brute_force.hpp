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

#ifndef RCC8_TESTS_BRUTE_FORCE_HPP_
#define RCC8_TESTS_BRUTE_FORCE_HPP_

#include <optional>
#include <vector>

#include "rcc8/algebra.hpp"
#include "rcc8/network.hpp"

namespace rcc8::testing {

// Consistency by enumerating base-relation refinements of every edge. A
// refinement is accepted iff every triangle (i, k, j) satisfies
// b_ij in b_ik o b_kj using only the 64 base table entries. Each node
// prunes domains with a naive triangle fixpoint written here, independent
// of the library's queue-based propagation, which keeps n <= 8 fast.
class BruteForce {
 public:
  explicit BruteForce(const CompositionTable& table);

  // Returns an atomic solution (b[i][j] for i < j) or nothing.
  std::optional<std::vector<std::vector<Base>>> solve(const Network& net) const;
  bool consistent(const Network& net) const { return solve(net).has_value(); }

  // Base-level composition straight from the table.
  std::uint8_t compose_mask(std::uint8_t a, std::uint8_t b) const;

 private:
  std::uint8_t entry_[8][8];
};

// True iff every triangle of an all-singleton network satisfies the base
// composition constraint; used to validate returned solutions.
bool atomic_triangles_ok(const CompositionTable& table,
                         const std::vector<std::vector<Base>>& b);

}  // namespace rcc8::testing

#endif  // RCC8_TESTS_BRUTE_FORCE_HPP_
