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

#include "rcc8/harness.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "rcc8/csv.hpp"
#include "rcc8/plot.hpp"

namespace rcc8 {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer over a running combination.
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t base, Model model, int n, double d,
                            int index) {
  std::uint64_t h = mix(0x72636338ull, base);
  h = mix(h, static_cast<std::uint64_t>(model));
  h = mix(h, static_cast<std::uint64_t>(n));
  h = mix(h, static_cast<std::uint64_t>(std::llround(d * 1000.0)));
  h = mix(h, static_cast<std::uint64_t>(index));
  return h;
}

std::vector<double> degree_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    double d = start + k * step;
    if (d > stop + step / 1000.0) break;
    grid.push_back(d);
  }
  return grid;
}

void SweepConfig::validate() const {
  if (ns.empty()) throw std::invalid_argument("no region counts given");
  if (instances < 1) throw std::invalid_argument("instances must be >= 1");
  if (configs.empty()) throw std::invalid_argument("no heuristics given");
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  auto grid = degree_grid(d_start, d_stop, d_step);
  if (grid.empty()) throw std::invalid_argument("empty degree range");
  for (int n : ns) {
    for (double d : grid) {
      edge_count(GenSpec{model, n, d, l, 0});  // throws on bad combinations
    }
  }
}

std::vector<TaskResult> run_grid(
    const SweepConfig& cfg,
    const std::function<void(const Instance&, int, double, int)>& on_instance) {
  cfg.validate();
  struct Job {
    int n;
    double d;
    int index;
  };
  std::vector<Job> jobs;
  for (int n : cfg.ns) {
    for (double d : degree_grid(cfg.d_start, cfg.d_stop, cfg.d_step)) {
      for (int k = 0; k < cfg.instances; ++k) jobs.push_back({n, d, k});
    }
  }
  const std::size_t per_job = cfg.configs.size();
  std::vector<TaskResult> results(jobs.size() * per_job);
  std::atomic<std::size_t> next{0};
  std::mutex callback_mutex;
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    std::vector<Solver> solvers;
    for (const auto& c : cfg.configs) {
      solvers.emplace_back(RelationAlgebra::standard(), c, cfg.solver);
    }
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      const Job& job = jobs[k];
      try {
        GenSpec spec{cfg.model, job.n, job.d, cfg.l,
                     instance_seed(cfg.seed, cfg.model, job.n, job.d, job.index)};
        Instance inst = generate(spec);
        if (on_instance) {
          std::lock_guard lock(callback_mutex);
          on_instance(inst, job.n, job.d, job.index);
        }
        for (std::size_t c = 0; c < per_job; ++c) {
          SolveOutcome o = solvers[c].solve(inst.network, cfg.cap);
          results[k * per_job + c] =
              TaskResult{job.n, job.d, job.index, spec.seed,
                         cfg.configs[c].id(), o.status, o.visited_nodes,
                         o.wall_time.count()};
        }
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (!error) {
          std::ostringstream msg;
          msg << "instance n=" << job.n << " d=" << format_double(job.d)
              << " index=" << job.index << ": " << e.what();
          error = std::make_exception_ptr(std::runtime_error(msg.str()));
        }
        next = jobs.size();
        return;
      }
    }
  };

  const unsigned threads = std::max(1u, cfg.workers);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

std::vector<DataPoint> aggregate(const SweepConfig& cfg,
                                 const std::vector<TaskResult>& results) {
  // Group by (n, d index, config) while keeping grid order.
  std::vector<DataPoint> points;
  const auto grid = degree_grid(cfg.d_start, cfg.d_stop, cfg.d_step);
  const std::size_t per_job = cfg.configs.size();
  const std::size_t per_point = per_job * cfg.instances;
  std::size_t offset = 0;
  for (int n : cfg.ns) {
    for (double d : grid) {
      for (std::size_t c = 0; c < per_job; ++c) {
        DataPoint p;
        p.model = std::string(to_string(cfg.model));
        p.n = n;
        p.d = d;
        p.l = cfg.l;
        p.count = cfg.instances;
        p.config = column_name(cfg.configs[c]);
        int consistent = 0, decided = 0;
        std::vector<std::uint64_t> nodes;
        std::vector<double> millis;
        for (int k = 0; k < cfg.instances; ++k) {
          const TaskResult& r = results.at(offset + k * per_job + c);
          nodes.push_back(r.nodes);
          millis.push_back(r.millis);
          if (r.status == SolveStatus::BudgetExhausted) {
            ++p.undecided;
            ++p.hard_count;
            continue;
          }
          ++decided;
          consistent += r.status == SolveStatus::Consistent;
        }
        p.p_sat = decided == 0 ? std::numeric_limits<double>::quiet_NaN()
                               : static_cast<double>(consistent) / decided;
        for (std::size_t q = 0; q < kPercentiles.size(); ++q) {
          p.nodes[q] = percentile(nodes, kPercentiles[q]);
          p.millis[q] = percentile(millis, kPercentiles[q]);
        }
        points.push_back(std::move(p));
      }
      offset += per_point;
    }
  }
  return points;
}

std::vector<DataPoint> sweep(const SweepConfig& cfg) {
  return aggregate(cfg, run_grid(cfg));
}

namespace {

const std::vector<std::string> kSweepHeader = {
    "model",     "n",         "d",         "l",         "count",
    "config",    "p_sat",     "undecided", "nodes_p50", "nodes_p70",
    "nodes_p99", "ms_p50",    "ms_p70",    "ms_p99",    "hard_count"};

std::string fixed_ms(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(3);
  s << v;
  return s.str();
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<DataPoint>& points) {
  for (std::size_t k = 0; k < kSweepHeader.size(); ++k) {
    out << (k ? "," : "") << kSweepHeader[k];
  }
  out << '\n';
  for (const auto& p : points) {
    out << csv_field(p.model) << ',' << p.n << ',' << format_double(p.d) << ','
        << format_double(p.l) << ',' << p.count << ',' << csv_field(p.config)
        << ',' << format_double(p.p_sat) << ',' << p.undecided;
    for (auto v : p.nodes) out << ',' << v;
    for (auto v : p.millis) out << ',' << fixed_ms(v);
    out << ',' << p.hard_count << '\n';
  }
}

std::vector<DataPoint> read_sweep_csv(std::istream& in,
                                      const std::string& source) {
  CsvReader reader(in, source, kSweepHeader);
  std::vector<DataPoint> points;
  while (auto row = reader.next()) {
    const auto& f = *row;
    DataPoint p;
    p.model = f[0];
    p.n = static_cast<int>(reader.to_u64(f[1]));
    p.d = reader.to_double(f[2]);
    p.l = reader.to_double(f[3]);
    p.count = static_cast<int>(reader.to_u64(f[4]));
    p.config = f[5];
    p.p_sat = reader.to_double(f[6]);
    p.undecided = static_cast<int>(reader.to_u64(f[7]));
    for (int q = 0; q < 3; ++q) p.nodes[q] = reader.to_u64(f[8 + q]);
    for (int q = 0; q < 3; ++q) p.millis[q] = reader.to_double(f[11 + q]);
    p.hard_count = static_cast<int>(reader.to_u64(f[14]));
    points.push_back(std::move(p));
  }
  return points;
}

double crossover_degree(std::vector<DataPoint> points) {
  std::erase_if(points, [](const DataPoint& p) { return std::isnan(p.p_sat); });
  std::sort(points.begin(), points.end(),
            [](const DataPoint& a, const DataPoint& b) { return a.d < b.d; });
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].p_sat > 0.5) continue;
    if (k == 0) return points[0].d;
    const auto& a = points[k - 1];
    const auto& b = points[k];
    double t = (a.p_sat - 0.5) / (a.p_sat - b.p_sat);
    return a.d + t * (b.d - a.d);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// Hard instances

namespace {

std::string hard_file_name(Model model, int n, double d, int index) {
  std::ostringstream s;
  s << to_string(model) << "-n" << n << "-d" << format_double(d) << '-'
    << index << ".rcc8";
  return s.str();
}

std::vector<std::string> manifest_header() {
  std::vector<std::string> h = {"instance_file", "n", "d", "seed"};
  for (const auto& c : all_configs()) h.push_back("nodes_" + column_name(c));
  return h;
}

}  // namespace

HardSet collect_hard(SweepConfig cfg, const std::filesystem::path& out_dir) {
  cfg.configs.assign(all_configs().begin(), all_configs().end());
  std::vector<TaskResult> results = run_grid(cfg);

  HardSet set;
  set.threshold = cfg.cap;
  const std::size_t per_job = cfg.configs.size();
  for (std::size_t k = 0; k < results.size(); k += per_job) {
    bool hard = false;
    for (std::size_t c = 0; c < per_job; ++c) {
      hard |= results[k + c].status == SolveStatus::BudgetExhausted;
    }
    if (!hard) continue;
    const TaskResult& first = results[k];
    HardEntry entry;
    entry.instance_file = hard_file_name(cfg.model, first.n, first.d, first.index);
    entry.n = first.n;
    entry.d = first.d;
    entry.seed = first.seed;
    RunRecord record;
    record.instance_id = entry.instance_file;
    for (std::size_t c = 0; c < per_job; ++c) {
      const TaskResult& r = results[k + c];
      entry.nodes[r.config] =
          r.status == SolveStatus::BudgetExhausted ? cfg.cap + 1 : r.nodes;
      record.results[r.config] = ConfigResult{r.status, r.nodes, cfg.cap};
    }
    set.entries.push_back(std::move(entry));
    set.records.push_back(std::move(record));
  }

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& e : set.entries) {
      Instance inst = generate(GenSpec{cfg.model, e.n, e.d, cfg.l, e.seed});
      write_instance_file(inst, (out_dir / e.instance_file).string());
    }
    auto open = [&](const char* name) {
      std::ofstream f(out_dir / name, std::ios::binary);
      if (!f) throw DataError("cannot write " + (out_dir / name).string());
      return f;
    };
    auto manifest = open("manifest.csv");
    write_hard_manifest(manifest, set);
    auto records = open("records.csv");
    write_records_csv(records, set.records);
  }
  return set;
}

void write_hard_manifest(std::ostream& out, const HardSet& set) {
  auto header = manifest_header();
  for (std::size_t k = 0; k < header.size(); ++k) {
    out << (k ? "," : "") << header[k];
  }
  out << '\n';
  for (const auto& e : set.entries) {
    out << csv_field(e.instance_file) << ',' << e.n << ','
        << format_double(e.d) << ',' << e.seed;
    for (auto v : e.nodes) out << ',' << v;
    out << '\n';
  }
}

HardSet read_hard_manifest(std::istream& in, const std::string& source,
                           std::uint64_t threshold) {
  CsvReader reader(in, source, manifest_header());
  HardSet set;
  set.threshold = threshold;
  while (auto row = reader.next()) {
    const auto& f = *row;
    HardEntry e;
    e.instance_file = f[0];
    e.n = static_cast<int>(reader.to_u64(f[1]));
    e.d = reader.to_double(f[2]);
    e.seed = reader.to_u64(f[3]);
    for (int c = 0; c < HeuristicConfig::kCount; ++c) {
      e.nodes[c] = reader.to_u64(f[4 + c]);
    }
    set.entries.push_back(std::move(e));
  }
  return set;
}

// Report

std::vector<std::filesystem::path> write_report(
    const std::vector<DataPoint>& points, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& name, const std::string& body) {
    auto path = dir / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot write " + path.string());
    f << body;
    if (!f) throw DataError("write failed: " + path.string());
    written.push_back(path);
  };
  std::ostringstream csv;
  write_sweep_csv(csv, points);
  emit("sweep.csv", csv.str());
  if (points.empty()) return written;

  // One curve per (n, config), in first-appearance order.
  std::map<std::pair<int, std::string>, std::size_t> slot;
  std::vector<Series> p_sat, nodes;
  bool many_configs = false;
  for (const auto& p : points) many_configs |= p.config != points[0].config;
  for (const auto& p : points) {
    auto key = std::make_pair(p.n, p.config);
    auto [it, inserted] = slot.emplace(key, p_sat.size());
    if (inserted) {
      std::string label = "n=" + std::to_string(p.n);
      if (many_configs) label += " " + p.config;
      p_sat.push_back({label, {}});
      nodes.push_back({label, {}});
    }
    if (!std::isnan(p.p_sat)) p_sat[it->second].points.emplace_back(p.d, p.p_sat);
    nodes[it->second].points.emplace_back(
        p.d, static_cast<double>(std::max<std::uint64_t>(1, p.nodes[0])));
  }
  emit("p_sat.svg", line_chart_svg({"Probability of satisfiability",
                                    "average degree d", "p_sat", false},
                                   p_sat));
  emit("nodes.svg", line_chart_svg({"Median visited nodes", "average degree d",
                                    "nodes (p50)", true},
                                   nodes));
  return written;
}

}  // namespace rcc8
