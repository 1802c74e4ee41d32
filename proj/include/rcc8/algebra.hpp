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

#ifndef RCC8_ALGEBRA_HPP_
#define RCC8_ALGEBRA_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <string_view>

#include "rcc8/relation.hpp"

namespace rcc8 {

// Composition of base relations: entry(a, b) is the set of relations that can
// hold between x and y when x a z and z b y.
class CompositionTable {
 public:
  // Parses the text format `BASE BASE : B1|B2|...` (64 lines, `#` comments
  // and blank lines ignored). Rejects duplicates, missing pairs and tables
  // that break the identity or converse laws. Errors carry `source:line`.
  static CompositionTable parse(std::istream& in, std::string_view source);
  static CompositionTable load(const std::filesystem::path& path);

  // The table shipped in data/rcc8_composition.txt, embedded at build time.
  static const CompositionTable& standard();

  Relation entry(Base a, Base b) const {
    return entries_[static_cast<int>(a) * kNumBases + static_cast<int>(b)];
  }

 private:
  CompositionTable() = default;
  std::array<Relation, kNumBases * kNumBases> entries_{};
};

// Composition lifted to disjunctive relations by union over member pairs.
Relation compose(Relation a, Relation b, const CompositionTable& table);

enum class WeightKind { Exact, Approx };

// Restrictiveness weights in 1..16; 1 is the most restricting relation.
// The empty relation has no weight (stored as 0) and never takes part in
// priority or selection decisions.
struct WeightTable {
  WeightKind kind = WeightKind::Exact;
  std::array<std::uint8_t, kNumRelations> weights{};
  std::array<std::int32_t, kNumRelations> raw_scores{};

  int weight(Relation r) const { return weights[r.mask()]; }
  int raw(Relation r) const { return raw_scores[r.mask()]; }
};

// Affine map of raw scores onto 1..16, rounding half up:
//   1 + round(15 * (raw - min) / (max - min)).
int scale_weight(std::int64_t raw, std::int64_t raw_min, std::int64_t raw_max);

// Precomputed operations over all 256 relations. Immutable once built.
class RelationAlgebra {
 public:
  explicit RelationAlgebra(const CompositionTable& table);

  static const RelationAlgebra& standard();

  const CompositionTable& table() const { return table_; }

  Relation compose(Relation a, Relation b) const {
    return Relation(full_[a.mask() * kNumRelations + b.mask()]);
  }
  Relation converse(Relation r) const { return Relation(converse_[r.mask()]); }

  const WeightTable& exact_weights() const { return exact_; }
  const WeightTable& approx_weights() const { return approx_; }
  const WeightTable& weights(WeightKind kind) const {
    return kind == WeightKind::Exact ? exact_ : approx_;
  }

  // The 256x256 lookup, row-major by left operand mask.
  const std::array<std::uint8_t, kNumRelations * kNumRelations>& full_table()
      const {
    return full_;
  }

 private:
  CompositionTable table_;
  std::array<std::uint8_t, kNumRelations * kNumRelations> full_{};
  std::array<std::uint8_t, kNumRelations> converse_{};
  WeightTable exact_;
  WeightTable approx_;
};

// raw(R) = sum over the 255 non-empty S of |R o S|.
WeightTable restrictiveness_exact(const RelationAlgebra& algebra);

// raw(R) = sum of the exact raw scores of R's base members.
WeightTable restrictiveness_approx(const RelationAlgebra& algebra);

}  // namespace rcc8

#endif  // RCC8_ALGEBRA_HPP_
