#    Copyright 2026 The ctspkit Authors
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.
import time
from typing import List

from ctspkit.exact.brute_force import brute_force_tsp
from ctspkit.solvers.eax import Strategy
from ctspkit.solvers.ga_eax import GaConfig, ga_solve
from ctspkit.solvers.local_search import LocalSearchConfig, local_search_solve
from ctspkit.solvers.solver import SolveResult, Solver
from ctspkit.utils.exceptions import InvalidConfig


class LocalSearchSolver(Solver):

    """Multi-start nearest neighbour + 2-opt + Or-opt"""

    NAME = "ls"

    def __init__(self, **params):
        super().__init__(**params)
        LocalSearchConfig(**params)

    def solve(self, dist, n: int, seed: int) -> SolveResult:
        return local_search_solve(dist, n, LocalSearchConfig(**self.params), seed)


class EaxSolver(Solver):

    """The genetic algorithm with edge assembly crossover"""

    NAME = "eax"

    def __init__(self, progress=None, **params):
        super().__init__(**params)
        self.progress = progress
        self.config(seed=0)

    def config(self, seed: int) -> GaConfig:
        params = dict(self.params)
        strategy = params.pop("strategy", None)
        if isinstance(strategy, str):
            params["strategy"] = Strategy.parse(strategy)
        elif strategy is not None:
            params["strategy"] = strategy
        return GaConfig(seed=seed, **params)

    def solve(self, dist, n: int, seed: int) -> SolveResult:
        return ga_solve(dist, n, self.config(seed), progress=self.progress)

    def describe(self) -> dict:
        described = super().describe()
        strategy = described["parameters"].get("strategy")
        if strategy is not None:
            described["parameters"]["strategy"] = str(strategy)
        return described


class ExactSolver(Solver):

    """Held-Karp dynamic programming, for tiny instances only"""

    NAME = "exact"

    def solve(self, dist, n: int, seed: int) -> SolveResult:
        started = time.perf_counter()
        tour, cost = brute_force_tsp(dist, n)
        return SolveResult(
            best_tour=tour,
            best_cost=cost,
            generations=0,
            wall_time=time.perf_counter() - started,
            history=[(cost, float(cost))],
            termination="optimal",
        )


_SOLVERS = {s.NAME: s for s in [LocalSearchSolver, EaxSolver, ExactSolver]}


def solver_names() -> List[str]:
    return sorted(_SOLVERS)


def get_solver(name: str, **params) -> Solver:
    """Returns a solver, given its name and parameters"""
    if name not in _SOLVERS:
        raise InvalidConfig(f"unknown algorithm '{name}', expected one of {solver_names()}")
    try:
        return _SOLVERS[name](**params)
    except TypeError as exc:
        raise InvalidConfig(f"bad parameters for '{name}': {exc}") from exc
