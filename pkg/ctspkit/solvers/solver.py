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
from abc import ABC, ABCMeta, abstractmethod
from dataclasses import dataclass, field
from typing import List, Tuple

from ctspkit.tours.tour import Tour


@dataclass(frozen=True)
class SolveResult:

    """The outcome of one solver run on one (transformed) instance"""

    best_tour: Tour
    best_cost: int
    generations: int
    wall_time: float
    # (best, average) cost per generation
    history: List[Tuple[int, float]] = field(default_factory=list)
    termination: str = ""


class Solver(ABC):

    """
    Solver is an abstract class for the algorithms that can be
    run through the command line and the benchmark harness. A solver
    only ever sees a plain TSP distance function.
    """

    __metaclass__ = ABCMeta

    NAME = None

    def __init__(self, **params):
        super().__init__()
        self.params = params

    @abstractmethod
    def solve(self, dist, n: int, seed: int) -> SolveResult:
        """Runs the algorithm once with the given seed"""
        raise NotImplementedError()

    def describe(self) -> dict:
        """Returns the algorithm name and its parameters"""
        return {"algorithm": self.NAME, "parameters": dict(self.params)}
