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
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence, Tuple

import numpy as np

from ctspkit.instances.distances import Distances, as_lookup
from ctspkit.instances.instance import Instance
from ctspkit.utils.exceptions import NotAPermutation


@dataclass(frozen=True)
class Tour:

    """
    Tour is a Hamiltonian cycle stored as a permutation of the vertex
    ids 1..n, with its total cost cached. Position 0 is an arbitrary
    anchor; two tours are the same cycle iff canonicalize() agrees.
    """

    order: Tuple[int, ...]
    cost: int

    @classmethod
    def from_order(cls, dist, order: Sequence[int]) -> "Tour":
        """Builds a tour and evaluates its cost under dist"""
        order = tuple(int(v) for v in order)
        return cls(order=order, cost=cycle_cost(dist, order))

    @property
    def n(self) -> int:
        return len(self.order)

    @cached_property
    def position(self) -> np.ndarray:
        """Inverse index: position[v] is the index of v in order"""
        position = np.full(self.n + 1, -1, dtype=np.int64)
        position[list(self.order)] = np.arange(self.n)
        return position

    def succ(self, vertex: int) -> int:
        return self.order[(int(self.position[vertex]) + 1) % self.n]

    def pred(self, vertex: int) -> int:
        return self.order[int(self.position[vertex]) - 1]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Cyclic edges (order[k], order[k + 1])"""
        for k in range(self.n):
            yield self.order[k], self.order[(k + 1) % self.n]

    def reversed(self) -> "Tour":
        return Tour(order=tuple(reversed(self.order)), cost=self.cost)


def check_permutation(order: Sequence[int], n: int):
    """Raises NotAPermutation unless order is a permutation of 1..n"""
    if len(order) != n:
        raise NotAPermutation(n, f"{len(order)} entries")
    seen = np.zeros(n + 1, dtype=bool)
    for vertex in order:
        if not 1 <= vertex <= n:
            raise NotAPermutation(n, f"vertex {vertex} out of range")
        if seen[vertex]:
            raise NotAPermutation(n, f"vertex {vertex} repeated")
        seen[vertex] = True


def cycle_cost(dist, order: Sequence[int]) -> int:
    """Sum of the cyclic edge costs of order under dist"""
    n = len(order)
    if n < 2:
        return 0
    if isinstance(dist, Distances) and dist.matrix() is not None:
        ids = np.asarray(order, dtype=np.int64)
        return int(dist.matrix()[ids, np.roll(ids, -1)].sum())
    lookup = as_lookup(dist)
    return sum(lookup(order[k], order[(k + 1) % n]) for k in range(n))


def tour_cost(inst: Distances, t: Tour) -> int:
    """The cyclic edge-cost sum of a tour; checks the permutation first"""
    check_permutation(t.order, inst.n)
    return cycle_cost(inst, t.order)


def inter_cluster_edge_count(inst: Instance, t: Tour) -> int:
    """Number of cyclic edges whose endpoints lie in different clusters"""
    if t.n < 2:
        return 0
    labels = inst.cluster_of[np.asarray(t.order, dtype=np.int64)]
    return int(np.count_nonzero(labels != np.roll(labels, -1)))


def is_cluster_contiguous(inst: Instance, t: Tour) -> bool:
    """Whether every cluster is visited as one unbroken block. A tour with
    m >= 2 clusters is contiguous exactly when it crosses m times."""
    if inst.m == 1:
        return True
    return inter_cluster_edge_count(inst, t) == inst.m


def canonicalize(t: Tour) -> Tour:
    """Rotates vertex 1 to the front, and reflects so that the second
    entry is the smaller neighbour of vertex 1"""
    if t.n < 3:
        return Tour(order=tuple(sorted(t.order)), cost=t.cost)
    start = t.order.index(1)
    order = t.order[start:] + t.order[:start]
    if order[-1] < order[1]:
        order = (order[0],) + tuple(reversed(order[1:]))
    return Tour(order=order, cost=t.cost)
