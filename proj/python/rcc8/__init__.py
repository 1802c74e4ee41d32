# Copyright 2026 The rcc8 Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""RCC-8 constraint reasoning: solver, generators and experiment harness."""

from rcc8._core import (
    DataError,
    Network,
    Relation,
    branching_factor,
    degree_threshold,
    generate,
    heuristics,
    optimize_combination,
    parse_instance,
    run_portfolio,
    solve,
    subset_sizes,
    sweep_csv,
    triple_census,
)

__all__ = [
    "DataError",
    "Network",
    "Relation",
    "branching_factor",
    "degree_threshold",
    "generate",
    "heuristics",
    "optimize_combination",
    "parse_instance",
    "run_portfolio",
    "solve",
    "subset_sizes",
    "sweep_csv",
    "triple_census",
]
