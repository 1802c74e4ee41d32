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

// Command-line front end. Exit codes: 0 ok, 1 usage error, 2 data error.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rcc8/algebra.hpp"
#include "rcc8/generator.hpp"
#include "rcc8/harness.hpp"
#include "rcc8/network.hpp"
#include "rcc8/portfolio.hpp"
#include "rcc8/solver.hpp"
#include "rcc8/subclasses.hpp"

namespace fs = std::filesystem;
using namespace rcc8;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Model model_arg(const std::string& s) {
  auto m = parse_model(s);
  if (!m) throw UsageError("unknown model: " + s);
  return *m;
}

HeuristicConfig config_arg(const std::string& s) {
  auto c = parse_config(s);
  if (!c) throw UsageError("unknown heuristic: " + s);
  return *c;
}

QueueDiscipline queue_arg(const std::string& s) {
  auto q = parse_queue_discipline(s);
  if (!q) throw UsageError("unknown queue discipline: " + s);
  return *q;
}

// Output goes to the named file, or stdout for "" or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw DataError("cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path);
  return in;
}

struct SweepArgs {
  std::string model = "A";
  std::vector<int> ns;
  double d_start = 0, d_stop = 0, d_step = 0.5, l = 4.0;
  int instances = 10;
  std::vector<std::string> configs;
  std::uint64_t cap = 10000, seed = 1;
  unsigned workers = 1;
  std::string queue = "exact";

  void add_to(CLI::App* app) {
    app->add_option("--model", model, "A or H")->required();
    app->add_option("--n", ns, "Instance sizes")->required();
    app->add_option("--d-start", d_start)->required();
    app->add_option("--d-stop", d_stop)->required();
    app->add_option("--d-step", d_step);
    app->add_option("--l", l);
    app->add_option("--instances", instances, "Instances per data point");
    app->add_option("--config", configs, "Heuristic, e.g. H8/dynamic/local");
    app->add_option("--cap", cap, "Visited-node cap per run");
    app->add_option("--seed", seed);
    app->add_option("--workers", workers);
    app->add_option("--queue", queue, "none, approx or exact");
  }

  SweepConfig build(bool all_configs_default) const {
    SweepConfig c;
    c.model = model_arg(model);
    c.ns = ns;
    c.d_start = d_start;
    c.d_stop = d_stop;
    c.d_step = d_step;
    c.l = l;
    c.instances = instances;
    for (const auto& s : configs) c.configs.push_back(config_arg(s));
    if (c.configs.empty()) {
      if (all_configs_default) {
        c.configs.assign(all_configs().begin(), all_configs().end());
      } else {
        c.configs = {HeuristicConfig{}};
      }
    }
    c.cap = cap;
    c.seed = seed;
    c.workers = workers;
    c.solver.discipline = queue_arg(queue);
    return c;
  }
};

std::string instance_name(Model m, int n, double d, int k) {
  return std::string(to_string(m)) + "-n" + std::to_string(n) + "-d" +
         format_double(d) + "-" + std::to_string(k) + ".rcc8";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RCC-8 reasoning and phase-transition experiments"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write random instances");
  std::string gen_model = "A", gen_out = ".";
  int gen_n = 0, gen_count = 1;
  double gen_d = 0, gen_l = 4.0;
  std::uint64_t gen_seed = 1;
  gen->add_option("--model", gen_model)->required();
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--d", gen_d)->required();
  gen->add_option("--l", gen_l);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--count", gen_count);
  gen->add_option("--out", gen_out, "Output directory");

  // solve
  auto* sol = app.add_subcommand("solve", "Decide one instance");
  std::string sol_file, sol_split = "H8", sol_order = "dynamic",
                        sol_scope = "local", sol_queue = "exact";
  std::uint64_t sol_nodes = 10000;
  sol->add_option("--instance", sol_file)->required();
  sol->add_option("--split", sol_split);
  sol->add_option("--order", sol_order);
  sol->add_option("--scope", sol_scope);
  sol->add_option("--max-nodes", sol_nodes);
  sol->add_option("--queue", sol_queue);

  // sweep
  auto* swp = app.add_subcommand("sweep", "Phase-transition sweep to CSV");
  SweepArgs swp_args;
  std::string swp_out;
  swp_args.add_to(swp);
  swp->add_option("--out", swp_out, "CSV file (default stdout)");

  // collect-hard
  auto* hard = app.add_subcommand("collect-hard",
                                  "Keep instances some heuristic cannot finish");
  SweepArgs hard_args;
  std::string hard_out;
  hard_args.add_to(hard);
  hard->add_option("--out", hard_out, "Output directory")->required();

  // portfolio
  auto* port = app.add_subcommand("portfolio", "Run or tune heuristic portfolios");
  port->require_subcommand(1);
  auto* prun = port->add_subcommand("run", "Run a plan on one instance");
  std::string prun_file, prun_plan;
  prun->add_option("--instance", prun_file)->required();
  prun->add_option("--plan", prun_plan, "Plan file (default: four-member plan, 2n nodes each)");
  auto* popt = port->add_subcommand("optimize", "Best combination per budget");
  std::string popt_records;
  std::vector<std::uint64_t> popt_budgets;
  popt->add_option("--records", popt_records)->required();
  popt->add_option("--budget", popt_budgets)->required();

  // flaws
  auto* fl = app.add_subcommand("flaws", "Trivial-inconsistency analysis");
  bool fl_census = false;
  std::vector<std::string> fl_thresholds;
  fl->add_flag("--census", fl_census, "Count inconsistent triples");
  fl->add_option("--thresholds", fl_thresholds, "n=<int> or n=inf, repeatable")
      ->expected(0, -1);

  // subsets
  auto* sub = app.add_subcommand("subsets", "Tractable subset tables");
  sub->require_subcommand(1);
  auto* dump = sub->add_subcommand("dump", "CSV of memberships and decompositions");

  // report
  auto* rep = app.add_subcommand("report", "Plots from a sweep CSV");
  std::string rep_in, rep_out = ".";
  rep->add_option("--sweep", rep_in)->required();
  rep->add_option("--out", rep_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) {
      Model m = model_arg(gen_model);
      fs::create_directories(gen_out);
      for (int k = 0; k < gen_count; ++k) {
        GenSpec spec{m, gen_n, gen_d, gen_l,
                     gen_count == 1 ? gen_seed
                                    : instance_seed(gen_seed, m, gen_n, gen_d, k)};
        fs::path p = fs::path(gen_out) / instance_name(m, gen_n, gen_d, k);
        write_instance_file(generate(spec), p.string());
        std::cout << p.string() << '\n';
      }
    } else if (*sol) {
      Instance inst = read_instance_file(sol_file);
      HeuristicConfig cfg = config_arg(sol_split + "/" + sol_order + "/" + sol_scope);
      SolverOptions opt;
      opt.discipline = queue_arg(sol_queue);
      SolveOutcome o = solve(inst.network, cfg, sol_nodes, opt);
      std::cout << "instance,split,order,scope,status,visited_nodes,millis\n"
                << sol_file << ',' << to_string(cfg.split) << ','
                << to_string(cfg.order) << ',' << to_string(cfg.scope) << ','
                << to_string(o.status) << ',' << o.visited_nodes << ','
                << o.wall_time.count() << '\n';
    } else if (*swp) {
      auto points = sweep(swp_args.build(false));
      Output out(swp_out);
      write_sweep_csv(out.stream(), points);
    } else if (*hard) {
      HardSet set = collect_hard(hard_args.build(true), hard_out);
      std::cout << set.entries.size() << " hard instances written to "
                << hard_out << '\n';
    } else if (*prun) {
      Instance inst = read_instance_file(prun_file);
      PortfolioPlan plan = default_plan(inst.network.size());
      if (!prun_plan.empty()) {
        auto in = open_input(prun_plan);
        plan = read_plan(in, prun_plan);
      }
      auto t0 = std::chrono::steady_clock::now();
      PortfolioOutcome o = run_portfolio(inst.network, plan);
      std::chrono::duration<double, std::milli> ms =
          std::chrono::steady_clock::now() - t0;
      std::cout << "instance,status,first_responder,total_nodes,millis\n"
                << prun_file << ',' << to_string(o.outcome.status) << ','
                << (o.first_responder ? column_name(*o.first_responder) : "none")
                << ',' << o.total_nodes << ',' << ms.count() << '\n';
    } else if (*popt) {
      auto in = open_input(popt_records);
      auto records = read_records_csv(in, popt_records);
      std::cout << "budget,solved,combination\n";
      for (const auto& r : optimize_combination(records, popt_budgets)) {
        std::cout << r.budget << ',' << r.solved << ','
                  << combination_name(r.best) << '\n';
      }
    } else if (*fl) {
      if (!fl_census && fl_thresholds.empty()) {
        throw UsageError("flaws needs --census or --thresholds");
      }
      TripleCensus census = count_inconsistent_triples(RelationAlgebra::standard());
      if (fl_census) {
        std::cout << "inconsistent,total,ratio\n"
                  << census.inconsistent << ',' << census.total << ','
                  << format_double(census.probability()) << '\n';
      }
      if (!fl_thresholds.empty()) {
        std::cout << "n,target,d\n";
        for (const auto& t : fl_thresholds) {
          if (t.rfind("n=", 0) != 0) throw UsageError("expected n=<int>: " + t);
          std::string v = t.substr(2);
          std::optional<int> n;
          if (v != "inf") {
            try {
              n = std::stoi(v);
            } catch (const std::exception&) {
              throw UsageError("expected n=<int>: " + t);
            }
          }
          for (double target : {1.0, 0.5}) {
            double d = solve_degree_threshold(n, target, census.probability());
            std::cout << v << ',' << target << ',' << format_double(d) << '\n';
          }
        }
      }
    } else if (*dump) {
      const auto& alg = RelationAlgebra::standard();
      RelationSet bhat = split_set_members(SplitSetId::Bhat, alg);
      std::cout << "mask,relation,np8,h8,c8,q8,bhat";
      for (SplitSetId id : kAllSplitSets) std::cout << ",parts_" << to_string(id);
      std::cout << '\n';
      for (int m = 0; m < kNumRelations; ++m) {
        Relation r(static_cast<std::uint8_t>(m));
        std::cout << m << ',' << to_string(r) << ',' << in_np8(r) << ','
                  << in_h8(r) << ',' << in_c8(r) << ',' << in_q8(r) << ','
                  << bhat.test(m);
        for (SplitSetId id : kAllSplitSets) {
          std::cout << ',' << SplitSet::standard(id).decomposition_size(r);
        }
        std::cout << '\n';
      }
    } else if (*rep) {
      auto in = open_input(rep_in);
      auto points = read_sweep_csv(in, rep_in);
      fs::create_directories(rep_out);
      for (const auto& p : write_report(points, rep_out)) {
        std::cout << p.string() << '\n';
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "rcc8: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rcc8: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "rcc8: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
