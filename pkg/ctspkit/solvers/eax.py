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
"""
Edge assembly crossover (EAX).

Two parent tours A and B are overlaid into a multigraph. Its edges are
partitioned into AB-cycles that alternate between A edges and B edges.
A chosen set of AB-cycles (the E-set) is applied to A: its A edges are
removed and its B edges are added. Every vertex keeps degree two, so the
result is a set of subtours, which are then greedily merged into one
tour by 2-edge exchanges.
"""
import heapq
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from ctspkit.instances.distances import as_lookup
from ctspkit.solvers.candidates import CandidateLists
from ctspkit.solvers.intermediate import Intermediate, SegmentIntermediate, other_neighbor
from ctspkit.tours.tour import Tour
from ctspkit.utils.exceptions import (
    EmptyCycles,
    InconsistentESet,
    InvalidConfig,
    VertexSetMismatch,
)

Edge = Tuple[int, int]

SINGLE = "single"
K_MULTIPLE = "k-multiple"


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class UnionGraph:

    """
    The union of two parent tours: every vertex has its two A
    neighbours and its two B neighbours. Edges found in both parents
    are listed in `common`.
    """

    n: int
    a_adjacent: Tuple[Tuple[int, ...], ...]
    b_adjacent: Tuple[Tuple[int, ...], ...]
    common: FrozenSet[Edge]

    def degree(self, vertex: int) -> int:
        return len(self.a_adjacent[vertex]) + len(self.b_adjacent[vertex])

    def is_common(self, u: int, v: int) -> bool:
        return _key(u, v) in self.common


def _adjacent(t: Tour) -> List[Tuple[int, ...]]:
    adjacent = [()] * (t.n + 1)
    order = t.order
    for k, vertex in enumerate(order):
        adjacent[vertex] = (order[k - 1], order[(k + 1) % t.n])
    return adjacent


def build_union_graph(sa: Tour, sb: Tour) -> UnionGraph:
    """Overlays two tours over the same vertices"""
    if sa.n != sb.n or set(sa.order) != set(sb.order):
        raise VertexSetMismatch(sa.n, sb.n)
    a_edges = {_key(u, v) for u, v in sa.edges()}
    common = frozenset(_key(u, v) for u, v in sb.edges() if _key(u, v) in a_edges)
    return UnionGraph(
        n=sa.n,
        a_adjacent=tuple(_adjacent(sa)),
        b_adjacent=tuple(_adjacent(sb)),
        common=common,
    )


@dataclass(frozen=True)
class ABCycle:

    """
    A closed walk v0, v1, ..., v(2L-1) whose edge (v_i, v_i+1) comes from
    parent A for even i and from parent B for odd i
    """

    vertices: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> List[Edge]:
        size = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % size]) for i in range(size)]

    def a_edges(self) -> List[Edge]:
        return self.edges()[0::2]

    def b_edges(self) -> List[Edge]:
        return self.edges()[1::2]


def extract_ab_cycles(g: UnionGraph, rng: np.random.Generator) -> List[ABCycle]:
    """
    Partitions the edges that are not common to both parents into
    AB-cycles. A walk alternately follows an unused A edge and an unused
    B edge, chosen at random; as soon as it comes back to a vertex at a
    point where the closed part alternates, that part is cut out as a
    cycle and the walk carries on from the vertex.
    """
    unused = (
        [[u for u in g.a_adjacent[v] if not g.is_common(v, u)] for v in range(g.n + 1)],
        [[u for u in g.b_adjacent[v] if not g.is_common(v, u)] for v in range(g.n + 1)],
    )
    cycles = []
    for start in rng.permutation(g.n) + 1:
        start = int(start)
        if not unused[0][start]:
            continue
        path = [start]
        seen: Dict[int, List[int]] = {start: [0]}
        while True:
            vertex, k = path[-1], len(path) - 1
            if k == 0 and not unused[0][vertex]:
                break
            options = unused[k % 2]
            choices = options[vertex]
            if len(choices) == 1:
                target = choices[0]
            else:
                target = choices[int(rng.integers(len(choices)))]
            choices.remove(target)
            options[target].remove(vertex)

            closing = None
            for index in reversed(seen.get(target, [])):
                if (k + 1 - index) % 2 == 0:
                    closing = index
                    break
            if closing is None:
                path.append(target)
                seen.setdefault(target, []).append(k + 1)
                continue

            cycle = path[closing:]
            for index in range(closing + 1, len(path)):
                seen[path[index]].pop()
            del path[closing + 1 :]
            if closing % 2 == 1:
                cycle = cycle[1:] + cycle[:1]
            cycles.append(ABCycle(vertices=tuple(cycle)))
    return cycles


@dataclass(frozen=True)
class Strategy:

    """How many AB-cycles go into one E-set"""

    kind: str = SINGLE
    k: int = 1

    def __post_init__(self):
        if self.kind not in (SINGLE, K_MULTIPLE):
            raise InvalidConfig(f"unknown E-set strategy '{self.kind}'")
        if self.k < 1:
            raise InvalidConfig(f"k-multiple needs k >= 1, got {self.k}")

    @classmethod
    def single(cls) -> "Strategy":
        return cls(kind=SINGLE, k=1)

    @classmethod
    def k_multiple(cls, k: int) -> "Strategy":
        return cls(kind=K_MULTIPLE, k=k)

    @classmethod
    def parse(cls, text: str) -> "Strategy":
        """Reads 'single' or 'k-multiple:<k>'"""
        kind, _, k = text.strip().lower().partition(":")
        if kind == SINGLE and not k:
            return cls.single()
        if kind == K_MULTIPLE and k.isdigit():
            return cls.k_multiple(int(k))
        raise InvalidConfig(f"cannot parse E-set strategy '{text}'")

    def __str__(self) -> str:
        return SINGLE if self.kind == SINGLE else f"{K_MULTIPLE}:{self.k}"


@dataclass(frozen=True)
class ESet:

    cycles: Tuple[ABCycle, ...]


def select_eset(cycles: List[ABCycle], strategy: Strategy, rng: np.random.Generator) -> ESet:
    """Draws the AB-cycles of one E-set uniformly at random"""
    if not cycles:
        raise EmptyCycles()
    if strategy.kind == SINGLE:
        return ESet(cycles=(cycles[int(rng.integers(len(cycles)))],))
    size = min(strategy.k, len(cycles))
    chosen = rng.choice(len(cycles), size=size, replace=False)
    return ESet(cycles=tuple(cycles[int(i)] for i in sorted(chosen)))


def apply_eset(sa: Tour, eset: ESet) -> SegmentIntermediate:
    """Removes the A edges of the E-set from sa and adds its B edges"""
    removed = [edge for cycle in eset.cycles for edge in cycle.a_edges()]
    added = [edge for cycle in eset.cycles for edge in cycle.b_edges()]
    return SegmentIntermediate(sa, removed, added)


class MergePlan:

    """
    An intermediate whose subtours have been joined: the edges changed
    by the merge are held as overrides, and the cost is tracked, so the
    tour only has to be walked when it is actually needed
    """

    def __init__(self, intermediate: Intermediate, overrides: Dict[int, Tuple[int, ...]], cost: int):
        self.intermediate = intermediate
        self.overrides = overrides
        self.cost = cost

    def neighbors(self, vertex: int) -> Tuple[int, ...]:
        rewired = self.overrides.get(vertex)
        if rewired is not None:
            return rewired
        return self.intermediate.neighbors(vertex)

    def to_tour(self) -> Tour:
        n = self.intermediate.n
        if n < 2:
            return Tour(order=tuple(range(1, n + 1)), cost=self.cost)
        order = [1]
        previous, current = 1, self.neighbors(1)[0]
        while current != 1:
            order.append(current)
            if len(order) > n:
                raise InconsistentESet("merged edges do not form a single tour")
            previous, current = current, other_neighbor(self.neighbors(current), previous)
        if len(order) != n:
            raise InconsistentESet(f"merged tour visits {len(order)} of {n} vertices")
        return Tour(order=tuple(order), cost=self.cost)


def plan_merge(dist, intermediate: Intermediate, cl: Optional[CandidateLists] = None) -> MergePlan:
    """
    Repeatedly joins the currently smallest subtour U to another one
    with the 2-edge exchange (a, b), (c, e) -> (a, c), (b, e) of least
    cost change, where a is in U, c is outside it and (when candidate
    lists are given) c is a candidate neighbour of a. Without any such
    pair, every vertex outside U is tried.
    """
    d = as_lookup(dist)
    cost = intermediate.edge_cost(dist)
    count = intermediate.subtour_count
    overrides: Dict[int, Tuple[int, ...]] = {}
    if count <= 1:
        return MergePlan(intermediate, overrides, cost)

    def neighbors(vertex):
        rewired = overrides.get(vertex)
        return rewired if rewired is not None else intermediate.neighbors(vertex)

    parent = list(range(count))

    def find(subtour):
        while parent[subtour] != subtour:
            parent[subtour] = parent[parent[subtour]]
            subtour = parent[subtour]
        return subtour

    groups = {s: [s] for s in range(count)}
    sizes = {s: intermediate.subtour_size(s) for s in range(count)}
    heap = [(size, s) for s, size in sizes.items()]
    heapq.heapify(heap)

    def best_exchange(members, root, outside):
        best = None
        for a in members:
            for b in set(neighbors(a)):
                d_ab = d(a, b)
                for c in outside(a):
                    if find(intermediate.label(c)) == root:
                        continue
                    d_ac = d(a, c)
                    for e in set(neighbors(c)):
                        delta = d_ac + d(b, e) - d_ab - d(c, e)
                        if best is None or delta < best[0]:
                            best = (delta, a, b, c, e)
        return best

    def rewire(vertex, old, new):
        linked = list(neighbors(vertex))
        linked[linked.index(old)] = new
        overrides[vertex] = tuple(linked)

    live = count
    while live > 1:
        size, root = heapq.heappop(heap)
        if find(root) != root or sizes[root] != size:
            continue
        members = [v for s in groups[root] for v in intermediate.subtour_members(s)]
        best = None
        if cl is not None:
            best = best_exchange(members, root, lambda a: cl[a])
        if best is None:
            everyone = range(1, intermediate.n + 1)
            best = best_exchange(members, root, lambda a: everyone)
        delta, a, b, c, e = best
        rewire(a, b, c)
        rewire(b, a, e)
        rewire(c, e, a)
        rewire(e, c, b)
        cost += delta

        other = find(intermediate.label(c))
        keep, gone = (other, root) if sizes[other] >= sizes[root] else (root, other)
        parent[gone] = keep
        groups[keep].extend(groups.pop(gone))
        sizes[keep] += sizes.pop(gone)
        heapq.heappush(heap, (sizes[keep], keep))
        live -= 1
    return MergePlan(intermediate, overrides, cost)


def merge_subtours(dist, intermediate: Intermediate, cl: Optional[CandidateLists] = None) -> Tour:
    """Greedily joins all subtours of an intermediate into one tour"""
    return plan_merge(dist, intermediate, cl).to_tour()


def eax_crossover(
    sa: Tour,
    sb: Tour,
    r: int,
    strategy: Strategy,
    rng: np.random.Generator,
    dist,
    cl: Optional[CandidateLists] = None,
) -> List[Tour]:
    """Generates up to r offspring of sa and sb, one fresh E-set each.
    Parents without any differing edge give back sa alone."""
    cycles = extract_ab_cycles(build_union_graph(sa, sb), rng)
    if not cycles:
        return [sa]
    offspring = []
    for _ in range(r):
        intermediate = apply_eset(sa, select_eset(cycles, strategy, rng))
        offspring.append(merge_subtours(dist, intermediate, cl))
    return offspring
