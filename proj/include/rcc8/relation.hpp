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

#ifndef RCC8_RELATION_HPP_
#define RCC8_RELATION_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rcc8 {

// Raised for malformed input files and values. The CLI maps it to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The eight base relations. The enumerator value is the bit index used in
// every mask, file format and tie-break in this library.
enum class Base : std::uint8_t { DC, EC, PO, TPP, NTPP, TPPi, NTPPi, EQ };

inline constexpr int kNumBases = 8;
inline constexpr int kNumRelations = 256;

inline constexpr std::array<Base, kNumBases> kAllBases = {
    Base::DC, Base::EC, Base::PO, Base::TPP,
    Base::NTPP, Base::TPPi, Base::NTPPi, Base::EQ};

inline constexpr std::array<std::string_view, kNumBases> kBaseNames = {
    "DC", "EC", "PO", "TPP", "NTPP", "TPPi", "NTPPi", "EQ"};

constexpr Base converse(Base b) {
  switch (b) {
    case Base::TPP: return Base::TPPi;
    case Base::TPPi: return Base::TPP;
    case Base::NTPP: return Base::NTPPi;
    case Base::NTPPi: return Base::NTPP;
    default: return b;
  }
}

constexpr std::string_view name(Base b) {
  return kBaseNames[static_cast<int>(b)];
}

std::optional<Base> parse_base(std::string_view token);

// A disjunction of base relations, stored as an 8-bit mask.
class Relation {
 public:
  constexpr Relation() = default;
  constexpr explicit Relation(std::uint8_t mask) : mask_(mask) {}
  constexpr Relation(Base b)  // NOLINT: a base relation is a relation
      : mask_(static_cast<std::uint8_t>(1u << static_cast<int>(b))) {}

  static constexpr Relation empty() { return Relation(0); }
  static constexpr Relation universal() { return Relation(0xFF); }
  static constexpr Relation identity() { return Relation(Base::EQ); }

  constexpr std::uint8_t mask() const { return mask_; }
  constexpr bool is_empty() const { return mask_ == 0; }
  constexpr bool is_universal() const { return mask_ == 0xFF; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(Base b) const {
    return (mask_ >> static_cast<int>(b)) & 1u;
  }
  constexpr bool subset_of(Relation other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool intersects(Relation other) const {
    return (mask_ & other.mask_) != 0;
  }

  constexpr friend Relation operator|(Relation a, Relation b) {
    return Relation(static_cast<std::uint8_t>(a.mask_ | b.mask_));
  }
  constexpr friend Relation operator&(Relation a, Relation b) {
    return Relation(static_cast<std::uint8_t>(a.mask_ & b.mask_));
  }
  constexpr friend bool operator==(Relation, Relation) = default;
  constexpr friend auto operator<=>(Relation a, Relation b) {
    return a.mask_ <=> b.mask_;
  }

  // Calls fn(Base) for every member, in canonical bit order.
  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::uint8_t m = mask_; m != 0; m &= static_cast<std::uint8_t>(m - 1)) {
      fn(static_cast<Base>(std::countr_zero(m)));
    }
  }

 private:
  std::uint8_t mask_ = 0;
};

constexpr Relation unite(Relation a, Relation b) { return a | b; }
constexpr Relation intersect(Relation a, Relation b) { return a & b; }

namespace detail {
constexpr std::array<std::uint8_t, kNumRelations> make_converse_table() {
  std::array<std::uint8_t, kNumRelations> table{};
  for (int m = 0; m < kNumRelations; ++m) {
    Relation out;
    Relation(static_cast<std::uint8_t>(m)).for_each([&](Base b) {
      out = out | Relation(converse(b));
    });
    table[m] = out.mask();
  }
  return table;
}
inline constexpr auto kConverseTable = make_converse_table();
}  // namespace detail

constexpr Relation converse(Relation r) {
  return Relation(detail::kConverseTable[r.mask()]);
}

// "DC|EC", "*" for the universal relation and "{}" for the empty one.
std::string to_string(Relation r);

// Accepts the forms produced by to_string. Throws DataError otherwise.
Relation parse_relation(std::string_view text);

}  // namespace rcc8

#endif  // RCC8_RELATION_HPP_
