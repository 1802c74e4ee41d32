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

#ifndef RCC8_NETWORK_HPP_
#define RCC8_NETWORK_HPP_

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcc8/algebra.hpp"
#include "rcc8/relation.hpp"

namespace rcc8 {

// n x n constraint matrix with M[i][i] = {EQ} and M[j][i] = M[i][j]~.
class Network {
 public:
  Network() = default;
  // All off-diagonal entries universal.
  explicit Network(int n);

  int size() const { return n_; }

  Relation at(int i, int j) const { return m_[index(i, j)]; }

  // Writes M[i][j] and its converse M[j][i]. Requires i != j.
  void set(int i, int j, Relation r) {
    m_[index(i, j)] = r;
    m_[index(j, i)] = converse(r);
  }

  bool has_empty() const;
  // Diagonal identity and converse symmetry hold everywhere.
  bool well_formed() const;
  // Number of pairs i < j with a non-universal relation.
  std::size_t constrained_edges() const;

  std::span<const Relation> entries() const { return m_; }

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<Relation> m_;
};

// Undo log of edge writes, used to restore a network on backtrack.
class Trail {
 public:
  using Mark = std::size_t;

  void record(int i, int j, Relation old) { log_.push_back({i, j, old}); }
  Mark mark() const { return log_.size(); }
  void undo_to(Network& net, Mark mark);
  void clear() { log_.clear(); }

 private:
  struct Entry {
    int i;
    int j;
    Relation old;
  };
  std::vector<Entry> log_;
};

// M[i][j] := M[i][j] n (M[i][k] o M[k][j]), converse written alongside.
// Returns true iff M[i][j] changed (possibly to the empty relation).
bool revise(Network& net, int i, int k, int j, const RelationAlgebra& algebra,
            Trail* trail = nullptr);

enum class QueueDiscipline { Unweighted, ApproxWeighted, ExactWeighted };

std::string_view to_string(QueueDiscipline q);
std::optional<QueueDiscipline> parse_queue_discipline(std::string_view text);

// Set of directed path triples (p, r, q), each meaning "revise M[p][q]
// through r". The unweighted discipline is FIFO. The weighted ones pop a
// minimum of weight(M[p][r]) + weight(M[r][q]), with FIFO order inside a
// priority level. A re-push with a lower priority moves the entry down;
// the old slot is dropped lazily.
class PathQueue {
 public:
  void reset(int n, QueueDiscipline discipline);

  bool empty() const { return size_ == 0; }
  std::size_t size() const { return size_; }

  void push(int p, int r, int q, int priority);
  // Requires !empty().
  std::uint32_t pop();
  void clear();

  std::uint32_t encode(int p, int r, int q) const {
    return (static_cast<std::uint32_t>(p) * n_ + r) * n_ + q;
  }
  void decode(std::uint32_t t, int& p, int& r, int& q) const {
    q = static_cast<int>(t % n_);
    t /= n_;
    r = static_cast<int>(t % n_);
    p = static_cast<int>(t / n_);
  }

  static constexpr int kMaxPriority = 32;

 private:
  int n_ = 0;
  bool weighted_ = false;
  std::size_t size_ = 0;
  // Unweighted: membership bits. Weighted: queued priority per triple (0 =
  // absent).
  std::vector<std::uint64_t> member_bits_;
  std::vector<std::uint8_t> queued_at_;
  std::deque<std::uint32_t> fifo_;
  std::vector<std::deque<std::uint32_t>> buckets_;
  int min_bucket_ = kMaxPriority + 1;
};

enum class PcStatus { ConsistentApproximation, Fail };

struct PcResult {
  PcStatus status = PcStatus::ConsistentApproximation;
  std::uint64_t revisions = 0;  // successful revise calls
  std::uint64_t queue_ops = 0;  // triples popped

  bool failed() const { return status == PcStatus::Fail; }
};

struct PcOptions {
  // Leave out paths with a universal operand; they are queued when that
  // operand changes. Off means every triple is seeded, as in the textbook
  // algorithm. The fixpoint is the same either way.
  bool skip_universal_paths = true;
};

// Queue-based path-consistency. An engine owns its queue buffers and may be
// reused across networks of any size; one engine serves one thread.
class PathConsistency {
 public:
  static constexpr int kMaxRegions = 1600;

  PathConsistency(const RelationAlgebra& algebra, QueueDiscipline discipline,
                  PcOptions options = {});

  // Full run seeded with every path triple.
  PcResult enforce(Network& net, Trail* trail = nullptr);

  // Run seeded only with the paths through edge (i, j), after M[i][j] was
  // tightened on a previously path-consistent network.
  PcResult propagate(Network& net, int i, int j, Trail* trail = nullptr);

  QueueDiscipline discipline() const { return discipline_; }

 private:
  void prepare(const Network& net);
  void push(const Network& net, int p, int r, int q);
  void push_paths_through(const Network& net, int p, int q);
  PcResult drain(Network& net, Trail* trail);

  const RelationAlgebra& algebra_;
  QueueDiscipline discipline_;
  PcOptions options_;
  const WeightTable* weights_ = nullptr;
  PathQueue queue_;
  int prepared_for_ = -1;
};

// On-disk instance, shared by the generator, solver and harness:
//   rcc8 n=<n> model=<A|H|custom> d=<d> l=<l> seed=<u64>
//   i j : B1|B2|...      (0-based, i < j, non-universal edges only)
struct Instance {
  Network network;
  std::string model = "custom";
  double d = 0.0;
  double l = 0.0;
  std::uint64_t seed = 0;
  // Extra `#` comment lines written after the header.
  std::vector<std::string> comments;
};

std::string write_instance(const Instance& inst);
void write_instance_file(const Instance& inst, const std::string& path);
Instance parse_instance(std::string_view text, std::string_view source);
Instance read_instance_file(const std::string& path);

// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

}  // namespace rcc8

#endif  // RCC8_NETWORK_HPP_
