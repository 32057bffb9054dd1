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
from dataclasses import dataclass, field
from typing import Optional

from joblib import Parallel, delayed

from ctspkit.bench.stats import MANIFEST, PUBLISHED, Run, RunStats
from ctspkit.instances.instance import Instance
from ctspkit.instances.references import reference_cost
from ctspkit.solvers.solver import SolveResult, Solver
from ctspkit.solvers.solvers import get_solver
from ctspkit.tours.tour import Tour
from ctspkit.transform.big_m import recover_cost, recover_tour, to_tsp
from ctspkit.utils.exceptions import InvalidConfig
from ctspkit.utils.log import logger


@dataclass(frozen=True)
class AlgoSpec:

    """An algorithm name plus the parameters it is built with"""

    name: str
    params: dict = field(default_factory=dict)

    def solver(self, progress=None) -> Solver:
        if progress is not None:
            return get_solver(self.name, progress=progress, **self.params)
        return get_solver(self.name, **self.params)

    def label(self) -> str:
        if not self.params:
            return self.name
        settings = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.name}[{settings}]"


@dataclass(frozen=True)
class CtspSolution:

    """A solver run mapped back to the clustered instance"""

    tour: Tour
    cost: int
    tsp_cost: int
    result: SolveResult


def solve_ctsp(inst: Instance, spec: AlgoSpec, seed: int, progress=None) -> CtspSolution:
    """Transforms the instance, solves the plain TSP, and lifts the
    best tour back; raises InfeasibleTour if it is not contiguous"""
    tsp = to_tsp(inst)
    result = spec.solver(progress).solve(tsp, inst.n, seed)
    tour = recover_tour(tsp, result.best_tour)
    cost = recover_cost(result.best_cost, tsp.crossings, tsp.big_m)
    return CtspSolution(tour=tour, cost=cost, tsp_cost=result.best_cost, result=result)


def _one_run(inst: Instance, spec: AlgoSpec, seed: int) -> Run:
    started = time.perf_counter()
    solution = solve_ctsp(inst, spec, seed)
    wall_time = time.perf_counter() - started
    logger.debug("%s seed=%s: cost=%s (%.1fs)", inst.name, seed, solution.cost, wall_time)
    return Run(cost=solution.cost, wall_time=wall_time, seed=seed)


def run_trials(
    inst: Instance,
    spec: AlgoSpec,
    n_runs: int,
    base_seed: int = 0,
    reference: Optional[int] = None,
    n_jobs: int = 1,
) -> RunStats:
    """
    Solves an instance n_runs times with seeds base_seed,
    base_seed + 1, ... Runs may execute in parallel; results are kept
    in run order. Without an explicit reference, the published cost
    of the instance is used when one is known.
    """
    if n_runs < 1:
        raise InvalidConfig(f"n_runs must be at least 1, got {n_runs}")
    source = MANIFEST if reference is not None else None
    if reference is None:
        published = reference_cost(inst.name)
        if published is not None:
            reference, source = published.cost, PUBLISHED
    runs = Parallel(n_jobs=n_jobs)(
        delayed(_one_run)(inst, spec, base_seed + i) for i in range(n_runs)
    )
    stats = RunStats(
        instance=inst.name,
        algorithm=spec.label(),
        runs=tuple(runs),
        reference=reference,
        reference_source=source,
    )
    logger.info(
        "%s on %s: best=%s over %s runs", stats.algorithm, inst.name, stats.best, n_runs
    )
    return stats
