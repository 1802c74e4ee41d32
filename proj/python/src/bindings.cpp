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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rcc8/algebra.hpp"
#include "rcc8/generator.hpp"
#include "rcc8/harness.hpp"
#include "rcc8/network.hpp"
#include "rcc8/portfolio.hpp"
#include "rcc8/solver.hpp"
#include "rcc8/subclasses.hpp"

namespace py = pybind11;
using namespace rcc8;

namespace {

HeuristicConfig config_of(const std::string& text) {
  auto c = parse_config(text);
  if (!c) throw std::invalid_argument("unknown heuristic: " + text);
  return *c;
}

Model model_of(const std::string& text) {
  auto m = parse_model(text);
  if (!m) throw std::invalid_argument("unknown model: " + text);
  return *m;
}

py::dict outcome_dict(const SolveOutcome& o) {
  py::dict d;
  d["status"] = std::string(to_string(o.status));
  d["visited_nodes"] = o.visited_nodes;
  d["millis"] = o.wall_time.count();
  d["heuristic"] = column_name(o.heuristic);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "RCC-8 constraint reasoning core";

  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

  py::class_<Relation>(m, "Relation")
      .def(py::init([](const std::string& text) { return parse_relation(text); }))
      .def_static("from_mask", [](int mask) {
        if (mask < 0 || mask >= kNumRelations) throw std::invalid_argument("mask out of range");
        return Relation(static_cast<std::uint8_t>(mask));
      })
      .def_property_readonly("mask", &Relation::mask)
      .def("__str__", [](Relation r) { return to_string(r); })
      .def("__repr__", [](Relation r) { return "Relation('" + to_string(r) + "')"; })
      .def("__eq__", [](Relation a, Relation b) { return a == b; })
      .def("__hash__", [](Relation r) { return r.mask(); })
      .def("__or__", [](Relation a, Relation b) { return a | b; })
      .def("__and__", [](Relation a, Relation b) { return a & b; })
      .def("converse", [](Relation r) { return converse(r); })
      .def("compose", [](Relation a, Relation b) {
        return RelationAlgebra::standard().compose(a, b);
      });

  py::class_<Network>(m, "Network")
      .def(py::init<int>())
      .def_property_readonly("size", &Network::size)
      .def("at", [](const Network& n, int i, int j) {
        if (i < 0 || j < 0 || i >= n.size() || j >= n.size()) throw py::index_error();
        return n.at(i, j);
      })
      .def("set", [](Network& n, int i, int j, Relation r) {
        if (i < 0 || j < 0 || i >= n.size() || j >= n.size() || i == j) throw py::index_error();
        n.set(i, j, r);
      })
      .def("path_consistency", [](Network& n, const std::string& queue) {
        auto q = parse_queue_discipline(queue);
        if (!q) throw std::invalid_argument("unknown queue discipline: " + queue);
        PathConsistency pc(RelationAlgebra::standard(), *q);
        return !pc.enforce(n).failed();
      }, py::arg("queue") = "exact",
         "Tightens the network in place; False if a relation became empty.");

  m.def("parse_instance", [](const std::string& text) {
    Instance inst = parse_instance(text, "<string>");
    return py::make_tuple(inst.network, inst.model, inst.d, inst.l, inst.seed);
  });
  m.def("generate", [](const std::string& model, int n, double d, double l,
                       std::uint64_t seed) {
    return write_instance(generate({model_of(model), n, d, l, seed}));
  }, py::arg("model"), py::arg("n"), py::arg("d"), py::arg("l") = 4.0,
     py::arg("seed") = 1, "Instance file text.");

  m.def("solve", [](const Network& net, const std::string& heuristic,
                    std::uint64_t max_nodes) {
    py::gil_scoped_release release;
    SolveOutcome o = solve(net, config_of(heuristic), max_nodes);
    py::gil_scoped_acquire acquire;
    return outcome_dict(o);
  }, py::arg("network"), py::arg("heuristic") = "H8/dynamic/local",
     py::arg("max_nodes") = 10000);

  m.def("run_portfolio", [](const Network& net) {
    PortfolioOutcome o = run_portfolio(net, default_plan(net.size()));
    py::dict d = outcome_dict(o.outcome);
    d["first_responder"] = o.first_responder
                               ? py::cast(column_name(*o.first_responder))
                               : py::none();
    d["total_nodes"] = o.total_nodes;
    return d;
  });

  m.def("heuristics", [] {
    std::vector<std::string> out;
    for (const auto& c : all_configs()) out.push_back(to_string(c));
    return out;
  });

  m.def("subset_sizes", [] {
    SubsetReport r = subset_report(RelationAlgebra::standard());
    py::dict d;
    d["NP8"] = r.np8_size;
    d["H8"] = r.h8_size;
    d["C8"] = r.c8_size;
    d["Q8"] = r.q8_size;
    d["Bhat"] = r.bhat_size;
    return d;
  });
  m.def("branching_factor", [](const std::string& split) {
    auto id = parse_split_set(split);
    if (!id) throw std::invalid_argument("unknown split set: " + split);
    return SplitSet::standard(*id).avg_branching_factor();
  });

  m.def("triple_census", [] {
    TripleCensus c = count_inconsistent_triples(RelationAlgebra::standard());
    return py::make_tuple(c.inconsistent, c.total);
  });
  m.def("degree_threshold", &solve_degree_threshold, py::arg("n"),
        py::arg("target"), py::arg("p_inconsistent"));

  m.def("sweep_csv", [](const std::string& model, std::vector<int> ns,
                        double d_start, double d_stop, double d_step,
                        int instances, std::vector<std::string> heuristics,
                        std::uint64_t cap, std::uint64_t seed) {
    SweepConfig cfg;
    cfg.model = model_of(model);
    cfg.ns = std::move(ns);
    cfg.d_start = d_start;
    cfg.d_stop = d_stop;
    cfg.d_step = d_step;
    cfg.instances = instances;
    for (const auto& h : heuristics) cfg.configs.push_back(config_of(h));
    if (cfg.configs.empty()) cfg.configs = {HeuristicConfig{}};
    cfg.cap = cap;
    cfg.seed = seed;
    std::ostringstream out;
    {
      py::gil_scoped_release release;
      write_sweep_csv(out, sweep(cfg));
    }
    return out.str();
  }, py::arg("model"), py::arg("ns"), py::arg("d_start"), py::arg("d_stop"),
     py::arg("d_step") = 0.5, py::arg("instances") = 10,
     py::arg("heuristics") = std::vector<std::string>{}, py::arg("cap") = 10000,
     py::arg("seed") = 1);

  m.def("optimize_combination", [](const std::string& records_csv,
                                   std::uint64_t budget) {
    std::istringstream in(records_csv);
    auto records = read_records_csv(in, "<records>");
    CombinationResult r = optimize_combination(records, budget);
    return py::make_tuple(r.solved, combination_name(r.best));
  });
}
