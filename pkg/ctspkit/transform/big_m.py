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
import re
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Tuple

import numpy as np

from ctspkit.instances.distances import INT64_MAX, Distances
from ctspkit.instances.instance import Instance
from ctspkit.tours.tour import Tour, is_cluster_contiguous
from ctspkit.utils.exceptions import InfeasibleTour, NegativeResult, Overflow, TooLarge

# Largest n written as an explicit TSPLIB matrix
EXPORT_LIMIT = 3000

_HEADER_PATTERN = re.compile(r"M=(\d+)\s+m=(\d+)")


@dataclass(frozen=True, eq=False)
class TspInstance(Distances):

    """
    TspInstance is the plain TSP obtained from a clustered instance by
    adding big_m to the cost of every edge between two clusters:
    c'_ij = c_ij + M across clusters, c'_ij = c_ij inside one.
    Costs are derived on the fly from the source instance.
    """

    source: Instance
    big_m: int

    @property
    def n(self) -> int:
        return self.source.n

    @property
    def m(self) -> int:
        return self.source.m

    @property
    def name(self) -> str:
        return self.source.name

    @property
    def crossings(self) -> int:
        """Inter-cluster edges of every cluster-feasible tour"""
        return feasible_crossings(self.source.m)

    def _cost(self, i: int, j: int) -> int:
        labels = self.source.cluster_of
        penalty = self.big_m if labels[i] != labels[j] else 0
        return self.source._cost(i, j) + penalty

    def row(self, i: int) -> np.ndarray:
        labels = self.source.cluster_of
        costs = self.source.row(i) + self.big_m * (labels != labels[i])
        costs[0] = 0
        return costs

    @cached_property
    def _matrix(self) -> Optional[np.ndarray]:
        base = self.source.matrix()
        if base is None:
            return None
        labels = self.source.cluster_of
        padded = base + self.big_m * (labels[:, None] != labels[None, :])
        padded[0, :] = 0
        padded[:, 0] = 0
        padded.setflags(write=False)
        return padded

    @cached_property
    def _table(self) -> Optional[List[List[int]]]:
        matrix = self._matrix
        return None if matrix is None else matrix.tolist()

    def matrix(self) -> Optional[np.ndarray]:
        return self._matrix

    def table(self) -> Optional[List[List[int]]]:
        return self._table


def feasible_crossings(m: int) -> int:
    """A cluster-contiguous tour crosses between clusters m times,
    except with a single cluster where it never does"""
    return m if m >= 2 else 0


def big_m_value(inst: Instance) -> int:
    """M = n * c_max + 1: one extra inter-cluster edge then costs more
    than any possible sum of intra-cluster edges"""
    n, c_max = inst.n, inst.max_distance
    big_m = n * c_max + 1
    if n * c_max + n * big_m > INT64_MAX:
        raise Overflow(n, c_max)
    return big_m


def to_tsp(inst: Instance) -> TspInstance:
    """Transforms a clustered instance into a plain TSP instance"""
    return TspInstance(source=inst, big_m=big_m_value(inst))


def recover_cost(tsp_cost: int, m: int, big_m: int) -> int:
    """Maps the transformed cost of a tour back to its clustered cost,
    f(S) = f(S') - m * M"""
    result = tsp_cost - m * big_m
    if result < 0:
        raise NegativeResult(tsp_cost, m, big_m)
    return result


def lift_tour(tsp_tour: Tour, inst: Instance) -> Tuple[Tour, bool]:
    """Re-reads a tour of the transformed instance as a tour of the
    clustered one, with its cost under the original distances and
    whether it is cluster contiguous"""
    tour = Tour.from_order(inst, tsp_tour.order)
    return tour, is_cluster_contiguous(inst, tour)


def recover_tour(tsp: TspInstance, tsp_tour: Tour) -> Tour:
    """Lifts a solver tour and cross-checks its cost through the
    penalty identity; raises if the tour is not cluster feasible"""
    tour, feasible = lift_tour(tsp_tour, tsp.source)
    if not feasible:
        raise InfeasibleTour(f"tour of '{tsp.name}' is not cluster contiguous")
    recovered = recover_cost(tsp_tour.cost, tsp.crossings, tsp.big_m)
    if recovered != tour.cost:
        raise InfeasibleTour(
            f"recovered cost {recovered} disagrees with re-evaluated cost {tour.cost}"
        )
    return tour


def write_tsplib(tsp: TspInstance) -> str:
    """Renders the transformed instance as an EXPLICIT / FULL_MATRIX
    TSPLIB file; the COMMENT line records M and m"""
    if tsp.n > EXPORT_LIMIT:
        raise TooLarge("explicit TSPLIB export", tsp.n, EXPORT_LIMIT)
    lines = [
        f"NAME : {tsp.name}-bigm",
        "TYPE : TSP",
        f"COMMENT : big-M transform of {tsp.name} M={tsp.big_m} m={tsp.m}",
        f"DIMENSION : {tsp.n}",
        "EDGE_WEIGHT_TYPE : EXPLICIT",
        "EDGE_WEIGHT_FORMAT : FULL_MATRIX",
        "EDGE_WEIGHT_SECTION",
    ]
    for i in range(1, tsp.n + 1):
        lines.append(" ".join(str(int(c)) for c in tsp.row(i)[1:]))
    lines.append("EOF")
    return "\n".join(lines) + "\n"


def read_transform_header(text: str) -> Tuple[int, int]:
    """Returns (M, m) from the COMMENT line written by write_tsplib()"""
    for line in text.splitlines():
        if line.strip().upper().startswith("COMMENT"):
            match = _HEADER_PATTERN.search(line)
            if match is not None:
                return int(match.group(1)), int(match.group(2))
    raise InfeasibleTour("file has no big-M transform COMMENT line")
