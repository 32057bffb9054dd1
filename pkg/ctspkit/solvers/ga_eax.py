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
from fractions import Fraction
from typing import Callable, List, Optional

import numpy as np

from ctspkit.solvers.candidates import (
    DEFAULT_NEIGHBOURS,
    CandidateLists,
    build_candidate_lists,
)
from ctspkit.solvers.eax import (
    Strategy,
    apply_eset,
    build_union_graph,
    extract_ab_cycles,
    plan_merge,
    select_eset,
)
from ctspkit.solvers.local_search import improve, nearest_neighbor_tour
from ctspkit.solvers.solver import SolveResult
from ctspkit.tours.tour import Tour
from ctspkit.utils.exceptions import InvalidConfig
from ctspkit.utils.log import logger

CONVERGED = "converged"
MAX_GENERATIONS = "max_generations"


@dataclass(frozen=True)
class GaConfig:

    """
    Settings of the GA-EAX solver: p tours in the population, r
    offspring for every pair of parents, and a stop once the average
    population cost is within termination_epsilon of the best one.
    """

    p: int = 300
    r: int = 30
    strategy: Strategy = field(default_factory=Strategy.single)
    termination_epsilon: float = 0.001
    max_generations: int = 3000
    seed: int = 0
    k: int = DEFAULT_NEIGHBOURS
    or_opt: bool = True

    def __post_init__(self):
        if self.p < 2:
            raise InvalidConfig(f"population size must be at least 2, got {self.p}")
        if self.r < 1:
            raise InvalidConfig(f"offspring count must be at least 1, got {self.r}")
        if not self.termination_epsilon > 0:
            raise InvalidConfig(
                f"termination epsilon must be positive, got {self.termination_epsilon}"
            )
        if self.max_generations < 1:
            raise InvalidConfig(
                f"max_generations must be at least 1, got {self.max_generations}"
            )
        if self.k < 1:
            raise InvalidConfig(f"k must be at least 1, got {self.k}")


@dataclass(frozen=True)
class GenerationRecord:

    generation: int
    best: int
    average: float
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "generation": self.generation,
            "best": self.best,
            "average": self.average,
            "elapsed": self.elapsed,
        }


ProgressCallback = Callable[[GenerationRecord], None]


def initial_population(
    dist, n: int, cfg: GaConfig, cl: CandidateLists, rng: np.random.Generator
) -> List[Tour]:
    """p nearest neighbour tours from random starts, each improved by
    2-opt and Or-opt"""
    population = []
    for _ in range(cfg.p):
        start = int(rng.integers(1, n + 1))
        tour = nearest_neighbor_tour(dist, n, start, rng)
        population.append(improve(dist, tour, cl, cfg.or_opt))
    return population


def _best_offspring(
    dist,
    sa: Tour,
    sb: Tour,
    cfg: GaConfig,
    cl: CandidateLists,
    rng: np.random.Generator,
) -> Optional[Tour]:
    """The best of r offspring, only if it beats sa"""
    cycles = extract_ab_cycles(build_union_graph(sa, sb), rng)
    if not cycles:
        return None
    best = None
    for _ in range(cfg.r):
        intermediate = apply_eset(sa, select_eset(cycles, cfg.strategy, rng))
        plan = plan_merge(dist, intermediate, cl)
        if best is None or plan.cost < best.cost:
            best = plan
    if best.cost >= sa.cost:
        return None
    return best.to_tour()


def _converged(costs: List[int], epsilon: Fraction) -> bool:
    # average - best < epsilon, in exact arithmetic
    return Fraction(sum(costs) - len(costs) * min(costs), len(costs)) < epsilon


def ga_solve(
    dist, n: int, cfg: GaConfig, progress: Optional[ProgressCallback] = None
) -> SolveResult:
    """
    Runs the genetic algorithm with edge assembly crossover. Every
    generation shuffles the population and lets each P_i cross with
    P_i+1 (cyclically); P_i is replaced at once by the best offspring
    when that one is strictly cheaper.
    """
    started = time.perf_counter()
    rng = np.random.default_rng(cfg.seed)
    cl = build_candidate_lists(dist, n, min(cfg.k, max(n - 1, 1)))
    epsilon = Fraction(str(cfg.termination_epsilon))

    population = initial_population(dist, n, cfg, cl, rng)
    best = min(population, key=lambda t: t.cost)
    costs = [t.cost for t in population]
    history = [(best.cost, sum(costs) / len(costs))]
    logger.info(
        "Built population of %s tours (n=%s): best=%s average=%.2f",
        cfg.p,
        n,
        best.cost,
        history[0][1],
    )

    generation, termination = 0, MAX_GENERATIONS
    while generation < cfg.max_generations:
        if _converged(costs, epsilon):
            termination = CONVERGED
            break
        generation += 1
        population = [population[int(i)] for i in rng.permutation(cfg.p)]
        for i in range(cfg.p):
            child = _best_offspring(
                dist, population[i], population[(i + 1) % cfg.p], cfg, cl, rng
            )
            if child is not None:
                population[i] = child

        costs = [t.cost for t in population]
        leader = min(population, key=lambda t: t.cost)
        if leader.cost < best.cost:
            best = leader
        average = sum(costs) / len(costs)
        history.append((best.cost, average))
        logger.debug("generation %s: best=%s average=%.2f", generation, best.cost, average)
        if progress is not None:
            progress(
                GenerationRecord(
                    generation=generation,
                    best=best.cost,
                    average=average,
                    elapsed=time.perf_counter() - started,
                )
            )
    else:
        if _converged(costs, epsilon):
            termination = CONVERGED

    logger.info(
        "GA-EAX stopped (%s) after %s generations: best=%s",
        termination,
        generation,
        best.cost,
    )
    return SolveResult(
        best_tour=best,
        best_cost=best.cost,
        generations=generation,
        wall_time=time.perf_counter() - started,
        history=history,
        termination=termination,
    )
