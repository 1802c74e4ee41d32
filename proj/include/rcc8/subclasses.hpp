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

#ifndef RCC8_SUBCLASSES_HPP_
#define RCC8_SUBCLASSES_HPP_

#include <array>
#include <bitset>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rcc8/algebra.hpp"
#include "rcc8/relation.hpp"

namespace rcc8 {

using RelationSet = std::bitset<kNumRelations>;

// Membership in the NP-complete set and the three maximal tractable subsets.
// The empty relation belongs to H8, C8 and Q8 (they are closed under
// intersection) and not to NP8.
bool in_np8(Relation r);
bool in_h8(Relation r);
bool in_c8(Relation r);
bool in_q8(Relation r);

// Least superset of `seed` closed under composition, intersection and
// converse.
RelationSet closure(const RelationSet& seed, const RelationAlgebra& algebra);

enum class SplitSetId { B, Bhat, H8, C8, Q8 };

inline constexpr std::array<SplitSetId, 5> kAllSplitSets = {
    SplitSetId::B, SplitSetId::Bhat, SplitSetId::H8, SplitSetId::C8,
    SplitSetId::Q8};

std::string_view to_string(SplitSetId id);
std::optional<SplitSetId> parse_split_set(std::string_view text);

// Raw members of a split set, before any decomposition is built.
RelationSet split_set_members(SplitSetId id, const RelationAlgebra& algebra);

// A tractable relation set with a minimal decomposition of every relation
// into members. Parts are ordered least restricting first (descending
// weight), which is the order the backtracking search tries them in.
class SplitSet {
 public:
  SplitSet(SplitSetId id, RelationSet members,
           std::array<std::vector<Relation>, kNumRelations> decomposition);

  // Cached instance built from the standard algebra and exact weights.
  static const SplitSet& standard(SplitSetId id);

  SplitSetId id() const { return id_; }
  const RelationSet& members() const { return members_; }
  bool contains(Relation r) const { return members_.test(r.mask()); }
  std::size_t size() const { return members_.count(); }

  std::span<const Relation> decompose(Relation r) const {
    return decomposition_[r.mask()];
  }
  int decomposition_size(Relation r) const {
    return static_cast<int>(decomposition_[r.mask()].size());
  }

  // Sum of decomposition sizes over all 256 relations; the average
  // branching factor is total_parts() / 256.
  int total_parts() const;
  double avg_branching_factor() const { return total_parts() / 256.0; }

 private:
  SplitSetId id_;
  RelationSet members_;
  std::array<std::vector<Relation>, kNumRelations> decomposition_;
};

// For each relation, a minimum-cardinality cover by members that are subsets
// of it. Ties go to the cover with the largest weight sum, then to the
// lexicographically smallest part sequence (parts sorted by descending
// weight, then ascending mask). Members decompose to themselves.
SplitSet build_decomposition(SplitSetId id, const RelationSet& members,
                             const WeightTable& weights);

struct SubsetReport {
  std::size_t np8_size = 0;
  std::size_t h8_size = 0;
  std::size_t c8_size = 0;
  std::size_t q8_size = 0;
  std::size_t bhat_size = 0;
  // H8 u C8 equals the complement of NP8 over the 255 non-empty relations.
  bool union_complement_ok = false;
};

SubsetReport subset_report(const RelationAlgebra& algebra);

}  // namespace rcc8

#endif  // RCC8_SUBCLASSES_HPP_
