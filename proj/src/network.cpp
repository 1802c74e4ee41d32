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

#include "rcc8/network.hpp"

#include <cassert>
#include <stdexcept>

namespace rcc8 {

Network::Network(int n)
    : n_(n),
      m_(static_cast<std::size_t>(n) * n, Relation::universal()) {
  if (n < 0) throw std::invalid_argument("negative network size");
  for (int i = 0; i < n; ++i) m_[index(i, i)] = Relation::identity();
}

bool Network::has_empty() const {
  for (Relation r : m_) {
    if (r.is_empty()) return true;
  }
  return false;
}

bool Network::well_formed() const {
  for (int i = 0; i < n_; ++i) {
    if (at(i, i) != Relation::identity()) return false;
    for (int j = i + 1; j < n_; ++j) {
      if (at(j, i) != converse(at(i, j))) return false;
    }
  }
  return true;
}

std::size_t Network::constrained_edges() const {
  std::size_t count = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) count += !at(i, j).is_universal();
  }
  return count;
}

void Trail::undo_to(Network& net, Mark mark) {
  while (log_.size() > mark) {
    const Entry& e = log_.back();
    net.set(e.i, e.j, e.old);
    log_.pop_back();
  }
}

bool revise(Network& net, int i, int k, int j, const RelationAlgebra& algebra,
            Trail* trail) {
  Relation a = net.at(i, k);
  Relation b = net.at(k, j);
  // Anything composed with the universal relation is universal.
  if (a.is_universal() || b.is_universal()) return false;
  Relation old = net.at(i, j);
  Relation updated = old & algebra.compose(a, b);
  if (updated == old) return false;
  if (trail != nullptr) trail->record(i, j, old);
  net.set(i, j, updated);
  return true;
}

std::string_view to_string(QueueDiscipline q) {
  switch (q) {
    case QueueDiscipline::Unweighted: return "none";
    case QueueDiscipline::ApproxWeighted: return "approx";
    case QueueDiscipline::ExactWeighted: return "exact";
  }
  return "?";
}

std::optional<QueueDiscipline> parse_queue_discipline(std::string_view text) {
  if (text == "none" || text == "unweighted") return QueueDiscipline::Unweighted;
  if (text == "approx") return QueueDiscipline::ApproxWeighted;
  if (text == "exact") return QueueDiscipline::ExactWeighted;
  return std::nullopt;
}

// PathQueue

void PathQueue::reset(int n, QueueDiscipline discipline) {
  clear();
  n_ = n;
  weighted_ = discipline != QueueDiscipline::Unweighted;
  std::size_t cube = static_cast<std::size_t>(n) * n * n;
  if (weighted_) {
    member_bits_.clear();
    member_bits_.shrink_to_fit();
    queued_at_.assign(cube, 0);
    buckets_.resize(kMaxPriority + 1);
  } else {
    queued_at_.clear();
    queued_at_.shrink_to_fit();
    member_bits_.assign((cube + 63) / 64, 0);
  }
}

void PathQueue::push(int p, int r, int q, int priority) {
  std::uint32_t t = encode(p, r, q);
  if (!weighted_) {
    std::uint64_t bit = std::uint64_t{1} << (t & 63);
    std::uint64_t& word = member_bits_[t >> 6];
    if (word & bit) return;
    word |= bit;
    fifo_.push_back(t);
    ++size_;
    return;
  }
  assert(priority >= 1 && priority <= kMaxPriority);
  std::uint8_t& at = queued_at_[t];
  if (at != 0 && at <= priority) return;
  if (at == 0) ++size_;
  at = static_cast<std::uint8_t>(priority);
  buckets_[priority].push_back(t);
  if (priority < min_bucket_) min_bucket_ = priority;
}

std::uint32_t PathQueue::pop() {
  assert(size_ > 0);
  if (!weighted_) {
    std::uint32_t t = fifo_.front();
    fifo_.pop_front();
    member_bits_[t >> 6] &= ~(std::uint64_t{1} << (t & 63));
    --size_;
    return t;
  }
  for (;;) {
    while (buckets_[min_bucket_].empty()) ++min_bucket_;
    auto& bucket = buckets_[min_bucket_];
    std::uint32_t t = bucket.front();
    bucket.pop_front();
    // Entries superseded by a lower-priority push are skipped.
    if (queued_at_[t] != min_bucket_) continue;
    queued_at_[t] = 0;
    --size_;
    return t;
  }
}

void PathQueue::clear() {
  for (std::uint32_t t : fifo_) {
    member_bits_[t >> 6] &= ~(std::uint64_t{1} << (t & 63));
  }
  fifo_.clear();
  for (auto& bucket : buckets_) {
    for (std::uint32_t t : bucket) queued_at_[t] = 0;
    bucket.clear();
  }
  min_bucket_ = kMaxPriority + 1;
  size_ = 0;
}

// PathConsistency

PathConsistency::PathConsistency(const RelationAlgebra& algebra,
                                 QueueDiscipline discipline, PcOptions options)
    : algebra_(algebra), discipline_(discipline), options_(options) {
  if (discipline == QueueDiscipline::ExactWeighted) {
    weights_ = &algebra.exact_weights();
  } else if (discipline == QueueDiscipline::ApproxWeighted) {
    weights_ = &algebra.approx_weights();
  }
}

void PathConsistency::prepare(const Network& net) {
  if (net.size() > kMaxRegions) {
    throw std::invalid_argument("path-consistency supports at most " +
                                std::to_string(kMaxRegions) + " regions");
  }
  if (prepared_for_ != net.size()) {
    queue_.reset(net.size(), discipline_);
    prepared_for_ = net.size();
  }
}

void PathConsistency::push(const Network& net, int p, int r, int q) {
  Relation a = net.at(p, r);
  Relation b = net.at(r, q);
  // A path with a universal operand cannot revise anything; it is queued
  // again through push_paths_through once that operand is tightened.
  if (options_.skip_universal_paths && (a.is_universal() || b.is_universal())) {
    return;
  }
  int priority = 1;
  if (weights_ != nullptr) priority = weights_->weight(a) + weights_->weight(b);
  queue_.push(p, r, q, priority);
}

void PathConsistency::push_paths_through(const Network& net, int p, int q) {
  const int n = net.size();
  for (int s = 0; s < n; ++s) {
    if (s == p || s == q) continue;
    push(net, p, q, s);
    push(net, s, p, q);
  }
}

PcResult PathConsistency::enforce(Network& net, Trail* trail) {
  prepare(net);
  const int n = net.size();
  if (net.has_empty()) return PcResult{PcStatus::Fail, 0, 0};
  if (options_.skip_universal_paths) {
    // Only paths whose two operands are both constrained: walk the
    // neighbours of every middle region r. Same set as the loop below
    // minus the universal-operand paths, in the same (p, r, q) order class.
    std::vector<std::vector<int>> adj(n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b && !net.at(a, b).is_universal()) adj[a].push_back(b);
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j : adj[i]) {
        if (j <= i) continue;
        // (i, j, k): M[i][j] and M[j][k].
        for (int k : adj[j]) {
          if (k != i) push(net, i, j, k);
        }
        // (k, i, j): M[k][i] and M[i][j].
        for (int k : adj[i]) {
          if (k != j) push(net, k, i, j);
        }
      }
    }
    return drain(net, trail);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        push(net, i, j, k);
        push(net, k, i, j);
      }
    }
  }
  return drain(net, trail);
}

PcResult PathConsistency::propagate(Network& net, int i, int j, Trail* trail) {
  prepare(net);
  if (net.at(i, j).is_empty()) return PcResult{PcStatus::Fail, 0, 0};
  push_paths_through(net, i, j);
  return drain(net, trail);
}

PcResult PathConsistency::drain(Network& net, Trail* trail) {
  PcResult result;
  while (!queue_.empty()) {
    int p, r, q;
    queue_.decode(queue_.pop(), p, r, q);
    ++result.queue_ops;
    if (!revise(net, p, r, q, algebra_, trail)) continue;
    ++result.revisions;
    if (net.at(p, q).is_empty()) {
      queue_.clear();
      result.status = PcStatus::Fail;
      return result;
    }
    push_paths_through(net, p, q);
  }
  return result;
}

}  // namespace rcc8
