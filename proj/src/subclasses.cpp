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

#include "rcc8/subclasses.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rcc8 {
namespace {

constexpr Relation rel(std::initializer_list<Base> bases) {
  Relation r;
  for (Base b : bases) r = r | Relation(b);
  return r;
}

constexpr Relation kProperParts =
    rel({Base::TPP, Base::NTPP, Base::TPPi, Base::NTPPi});
constexpr Relation kPartsOrEq =
    rel({Base::TPP, Base::NTPP, Base::TPPi, Base::NTPPi, Base::EQ});

bool has(Relation r, std::initializer_list<Base> bases) {
  return rel(bases).subset_of(r);
}

}  // namespace

bool in_np8(Relation r) {
  if (r.is_empty()) return false;
  bool comprehension = !r.contains(Base::PO) &&
                       (r.contains(Base::NTPP) || r.contains(Base::TPP)) &&
                       (r.contains(Base::NTPPi) || r.contains(Base::TPPi));
  if (comprehension) return true;
  return r == rel({Base::EC, Base::NTPP, Base::EQ}) ||
         r == rel({Base::DC, Base::EC, Base::NTPP, Base::EQ}) ||
         r == rel({Base::EC, Base::NTPPi, Base::EQ}) ||
         r == rel({Base::DC, Base::EC, Base::NTPPi, Base::EQ});
}

bool in_h8(Relation r) {
  if (in_np8(r)) return false;
  bool excluded =
      (has(r, {Base::EQ, Base::NTPP}) && !r.contains(Base::TPP)) ||
      (has(r, {Base::EQ, Base::NTPPi}) && !r.contains(Base::TPPi));
  return !excluded;
}

bool in_c8(Relation r) {
  if (in_np8(r)) return false;
  // {EC} is a proper subset of R; implied by the non-empty intersection.
  bool excluded = r.contains(Base::EC) && !r.contains(Base::PO) &&
                  r.intersects(kPartsOrEq);
  return !excluded;
}

bool in_q8(Relation r) {
  if (in_np8(r)) return false;
  bool excluded = r.contains(Base::EQ) && !r.contains(Base::PO) &&
                  r.intersects(kProperParts);
  return !excluded;
}

RelationSet closure(const RelationSet& seed, const RelationAlgebra& algebra) {
  RelationSet set = seed;
  std::vector<Relation> members;
  bool grown = true;
  while (grown) {
    grown = false;
    members.clear();
    for (int r = 0; r < kNumRelations; ++r) {
      if (set.test(r)) members.emplace_back(static_cast<std::uint8_t>(r));
    }
    RelationSet next = set;
    for (Relation a : members) {
      next.set(algebra.converse(a).mask());
      for (Relation b : members) {
        next.set((a & b).mask());
        next.set(algebra.compose(a, b).mask());
      }
    }
    if (next != set) {
      set = next;
      grown = true;
    }
  }
  return set;
}

std::string_view to_string(SplitSetId id) {
  switch (id) {
    case SplitSetId::B: return "B";
    case SplitSetId::Bhat: return "Bhat";
    case SplitSetId::H8: return "H8";
    case SplitSetId::C8: return "C8";
    case SplitSetId::Q8: return "Q8";
  }
  return "?";
}

std::optional<SplitSetId> parse_split_set(std::string_view text) {
  for (SplitSetId id : kAllSplitSets) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

RelationSet split_set_members(SplitSetId id, const RelationAlgebra& algebra) {
  RelationSet out;
  switch (id) {
    case SplitSetId::B:
    case SplitSetId::Bhat:
      for (Base b : kAllBases) out.set(Relation(b).mask());
      if (id == SplitSetId::Bhat) out = closure(out, algebra);
      break;
    case SplitSetId::H8:
    case SplitSetId::C8:
    case SplitSetId::Q8: {
      auto pred = id == SplitSetId::H8   ? in_h8
                  : id == SplitSetId::C8 ? in_c8
                                         : in_q8;
      for (int r = 0; r < kNumRelations; ++r) {
        if (pred(Relation(static_cast<std::uint8_t>(r)))) out.set(r);
      }
      break;
    }
  }
  return out;
}

SplitSet::SplitSet(SplitSetId id, RelationSet members,
                   std::array<std::vector<Relation>, kNumRelations> decomposition)
    : id_(id), members_(members), decomposition_(std::move(decomposition)) {}

int SplitSet::total_parts() const {
  int total = 0;
  for (const auto& parts : decomposition_) {
    total += static_cast<int>(parts.size());
  }
  return total;
}

const SplitSet& SplitSet::standard(SplitSetId id) {
  static const std::array<SplitSet, 5> sets = [] {
    const auto& alg = RelationAlgebra::standard();
    auto make = [&](SplitSetId s) {
      return build_decomposition(s, split_set_members(s, alg),
                                 alg.exact_weights());
    };
    return std::array<SplitSet, 5>{make(SplitSetId::B), make(SplitSetId::Bhat),
                                   make(SplitSetId::H8), make(SplitSetId::C8),
                                   make(SplitSetId::Q8)};
  }();
  return sets[static_cast<int>(id)];
}

namespace {

// Least restricting first: descending weight, then ascending mask.
void order_parts(std::vector<Relation>& parts, const WeightTable& weights) {
  std::sort(parts.begin(), parts.end(), [&](Relation a, Relation b) {
    int wa = weights.weight(a), wb = weights.weight(b);
    if (wa != wb) return wa > wb;
    return a.mask() < b.mask();
  });
}

// Exhaustive search for the best cover of `target` with exactly `k` parts.
class CoverSearch {
 public:
  CoverSearch(Relation target, std::vector<Relation> candidates,
              const WeightTable& weights)
      : target_(target), cands_(std::move(candidates)), weights_(weights) {
    suffix_union_.assign(cands_.size() + 1, Relation());
    for (std::size_t i = cands_.size(); i-- > 0;) {
      suffix_union_[i] = suffix_union_[i + 1] | cands_[i];
    }
  }

  // Returns true if some cover of size k exists; best_ holds the winner.
  bool run(int k) {
    k_ = k;
    found_ = false;
    chosen_.clear();
    recurse(0, Relation());
    return found_;
  }

  const std::vector<Relation>& best() const { return best_; }

 private:
  void recurse(std::size_t start, Relation covered) {
    if (static_cast<int>(chosen_.size()) == k_) {
      if (covered == target_) consider();
      return;
    }
    Relation missing(static_cast<std::uint8_t>(target_.mask() & ~covered.mask()));
    int left = k_ - static_cast<int>(chosen_.size());
    for (std::size_t i = start; i + left <= cands_.size(); ++i) {
      if (!missing.subset_of(suffix_union_[i])) return;
      chosen_.push_back(cands_[i]);
      recurse(i + 1, covered | cands_[i]);
      chosen_.pop_back();
    }
  }

  void consider() {
    std::vector<Relation> seq = chosen_;
    order_parts(seq, weights_);
    int sum = 0;
    for (Relation r : seq) sum += weights_.weight(r);
    if (!found_ || sum > best_sum_ ||
        (sum == best_sum_ &&
         std::lexicographical_compare(seq.begin(), seq.end(), best_.begin(),
                                      best_.end()))) {
      found_ = true;
      best_sum_ = sum;
      best_ = std::move(seq);
    }
  }

  Relation target_;
  std::vector<Relation> cands_;
  std::vector<Relation> suffix_union_;
  const WeightTable& weights_;
  int k_ = 0;
  bool found_ = false;
  int best_sum_ = 0;
  std::vector<Relation> chosen_;
  std::vector<Relation> best_;
};

}  // namespace

SplitSet build_decomposition(SplitSetId id, const RelationSet& members,
                             const WeightTable& weights) {
  for (Base b : kAllBases) {
    if (!members.test(Relation(b).mask())) {
      throw std::invalid_argument("split set " + std::string(to_string(id)) +
                                  " lacks a base relation");
    }
  }
  std::array<std::vector<Relation>, kNumRelations> decomposition;
  for (int m = 0; m < kNumRelations; ++m) {
    Relation target(static_cast<std::uint8_t>(m));
    if (members.test(m)) {
      decomposition[m] = {target};
      continue;
    }
    if (target.is_empty()) continue;  // empty cover
    std::vector<Relation> candidates;
    for (int c = 1; c < kNumRelations; ++c) {
      Relation cand(static_cast<std::uint8_t>(c));
      if (members.test(c) && cand.subset_of(target)) candidates.push_back(cand);
    }
    CoverSearch search(target, std::move(candidates), weights);
    bool ok = false;
    for (int k = 2; k <= target.size() && !ok; ++k) {
      if (search.run(k)) {
        decomposition[m] = search.best();
        ok = true;
      }
    }
    // Cannot fail: the singletons of the target always cover it.
    assert(ok);
  }
  return SplitSet(id, members, std::move(decomposition));
}

SubsetReport subset_report(const RelationAlgebra& algebra) {
  SubsetReport rep;
  bool ok = true;
  for (int m = 0; m < kNumRelations; ++m) {
    Relation r(static_cast<std::uint8_t>(m));
    rep.np8_size += in_np8(r);
    rep.h8_size += in_h8(r);
    rep.c8_size += in_c8(r);
    rep.q8_size += in_q8(r);
    if (m != 0 && ((in_h8(r) || in_c8(r)) == in_np8(r))) ok = false;
  }
  rep.bhat_size = split_set_members(SplitSetId::Bhat, algebra).count();
  rep.union_complement_ok = ok;
  return rep;
}

}  // namespace rcc8
