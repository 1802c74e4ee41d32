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

#include "rcc8/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rcc8/composition_table_data.hpp"

namespace rcc8 {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void fail_at(std::string_view source, int line,
                          const std::string& what) {
  throw DataError(std::string(source) + ":" + std::to_string(line) + ": " +
                  what);
}

}  // namespace

CompositionTable CompositionTable::parse(std::istream& in,
                                         std::string_view source) {
  CompositionTable t;
  std::array<int, kNumBases * kNumBases> seen_at{};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() != 4 || tok[2] != ":") {
      fail_at(source, line_no, "expected 'BASE BASE : RELATION'");
    }
    auto a = parse_base(tok[0]);
    auto b = parse_base(tok[1]);
    if (!a || !b) fail_at(source, line_no, "unknown base relation");
    Relation r;
    try {
      r = parse_relation(tok[3]);
    } catch (const DataError& e) {
      fail_at(source, line_no, e.what());
    }
    if (r.is_empty()) fail_at(source, line_no, "empty composition entry");
    int idx = static_cast<int>(*a) * kNumBases + static_cast<int>(*b);
    if (seen_at[idx] != 0) {
      fail_at(source, line_no,
              "duplicate entry (first at line " + std::to_string(seen_at[idx]) +
                  ")");
    }
    seen_at[idx] = line_no;
    t.entries_[idx] = r;
  }
  for (Base a : kAllBases) {
    for (Base b : kAllBases) {
      if (seen_at[static_cast<int>(a) * kNumBases + static_cast<int>(b)] == 0) {
        throw DataError(std::string(source) + ": missing entry " +
                        std::string(name(a)) + " " + std::string(name(b)));
      }
    }
  }
  // Identity and converse laws.
  for (Base a : kAllBases) {
    for (Base b : kAllBases) {
      int line = seen_at[static_cast<int>(a) * kNumBases + static_cast<int>(b)];
      Relation e = t.entry(a, b);
      if (a == Base::EQ && e != Relation(b)) {
        fail_at(source, line, "identity law violated: EQ o b must be {b}");
      }
      if (b == Base::EQ && e != Relation(a)) {
        fail_at(source, line, "identity law violated: a o EQ must be {a}");
      }
      if (converse(e) != t.entry(converse(b), converse(a))) {
        fail_at(source, line,
                "converse law violated: entry(a,b)~ != entry(b~,a~)");
      }
    }
  }
  return t;
}

CompositionTable CompositionTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return parse(in, path.string());
}

const CompositionTable& CompositionTable::standard() {
  static const CompositionTable table = [] {
    std::istringstream in(detail::kCompositionTableText);
    return parse(in, "rcc8_composition.txt");
  }();
  return table;
}

Relation compose(Relation a, Relation b, const CompositionTable& table) {
  Relation out;
  a.for_each([&](Base p) {
    b.for_each([&](Base q) { out = out | table.entry(p, q); });
  });
  return out;
}

int scale_weight(std::int64_t raw, std::int64_t raw_min, std::int64_t raw_max) {
  if (raw_max == raw_min) return 1;
  std::int64_t num = 15 * (raw - raw_min);
  std::int64_t den = raw_max - raw_min;
  return static_cast<int>(1 + (2 * num + den) / (2 * den));
}

namespace {

WeightTable scale_table(WeightKind kind,
                        const std::array<std::int32_t, kNumRelations>& raw) {
  WeightTable w;
  w.kind = kind;
  w.raw_scores = raw;
  auto first = raw.begin() + 1;  // skip the empty relation
  auto [lo, hi] = std::minmax_element(first, raw.end());
  for (int r = 1; r < kNumRelations; ++r) {
    w.weights[r] = static_cast<std::uint8_t>(scale_weight(raw[r], *lo, *hi));
  }
  return w;
}

}  // namespace

WeightTable restrictiveness_exact(const RelationAlgebra& algebra) {
  std::array<std::int32_t, kNumRelations> raw{};
  for (int r = 1; r < kNumRelations; ++r) {
    std::int32_t sum = 0;
    for (int s = 1; s < kNumRelations; ++s) {
      sum += algebra
                 .compose(Relation(static_cast<std::uint8_t>(r)),
                          Relation(static_cast<std::uint8_t>(s)))
                 .size();
    }
    raw[r] = sum;
  }
  return scale_table(WeightKind::Exact, raw);
}

WeightTable restrictiveness_approx(const RelationAlgebra& algebra) {
  const WeightTable exact = restrictiveness_exact(algebra);
  std::array<std::int32_t, kNumRelations> raw{};
  for (int r = 1; r < kNumRelations; ++r) {
    Relation(static_cast<std::uint8_t>(r)).for_each([&](Base b) {
      raw[r] += exact.raw(Relation(b));
    });
  }
  return scale_table(WeightKind::Approx, raw);
}

RelationAlgebra::RelationAlgebra(const CompositionTable& table) : table_(table) {
  for (int a = 0; a < kNumRelations; ++a) {
    for (int b = 0; b < kNumRelations; ++b) {
      full_[a * kNumRelations + b] =
          rcc8::compose(Relation(static_cast<std::uint8_t>(a)),
                        Relation(static_cast<std::uint8_t>(b)), table_)
              .mask();
    }
    converse_[a] = rcc8::converse(Relation(static_cast<std::uint8_t>(a))).mask();
  }
  exact_ = restrictiveness_exact(*this);
  approx_ = restrictiveness_approx(*this);
}

const RelationAlgebra& RelationAlgebra::standard() {
  static const RelationAlgebra algebra(CompositionTable::standard());
  return algebra;
}

}  // namespace rcc8
