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
from collections import deque
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

import numpy as np

from ctspkit.instances.distances import INT64_MAX, as_lookup, distance_row
from ctspkit.solvers.candidates import (
    DEFAULT_NEIGHBOURS,
    CandidateLists,
    build_candidate_lists,
)
from ctspkit.solvers.solver import SolveResult
from ctspkit.tours.tour import Tour
from ctspkit.utils.exceptions import InvalidConfig
from ctspkit.utils.log import logger

# Called with the new tour cost after every accepted move
CostMonitor = Callable[[int], None]


class _ArrayTour:

    """A mutable tour: the vertex order plus its inverse index"""

    def __init__(self, order: Sequence[int]):
        self.order = list(order)
        self.n = len(self.order)
        self.pos = [0] * (self.n + 1)
        for index, vertex in enumerate(self.order):
            self.pos[vertex] = index

    def succ(self, vertex: int) -> int:
        return self.order[(self.pos[vertex] + 1) % self.n]

    def pred(self, vertex: int) -> int:
        return self.order[self.pos[vertex] - 1]

    def reverse(self, i: int, j: int):
        """Reverses the cyclic run of positions i..j, or the complement
        run when that one is shorter; both give the same cycle"""
        n = self.n
        length = (j - i) % n + 1
        if 2 * length > n:
            i, j = (j + 1) % n, (i - 1) % n
            length = n - length
        order, pos = self.order, self.pos
        for step in range(length // 2):
            p, q = (i + step) % n, (j - step) % n
            order[p], order[q] = order[q], order[p]
            pos[order[p]] = p
            pos[order[q]] = q

    def rebuild(self, order: List[int]):
        self.order = order
        for index, vertex in enumerate(order):
            self.pos[vertex] = index


def nearest_neighbor_tour(dist, n: int, start: int, rng: np.random.Generator) -> Tour:
    """Greedy tour from start, always moving to the nearest unvisited
    vertex; ties are broken uniformly at random"""
    if not 1 <= start <= n:
        raise InvalidConfig(f"start vertex {start} outside 1..{n}")
    visited = np.zeros(n + 1, dtype=bool)
    visited[0] = True
    visited[start] = True
    order = [start]
    current = start
    for _ in range(n - 1):
        costs = np.where(visited, INT64_MAX, distance_row(dist, n, current))
        ties = np.flatnonzero(costs == costs.min())
        current = int(ties[0]) if len(ties) == 1 else int(rng.choice(ties))
        visited[current] = True
        order.append(current)
    return Tour.from_order(dist, order)


def _push(queue: deque, queued: List[bool], *vertices: int):
    for vertex in vertices:
        if not queued[vertex]:
            queued[vertex] = True
            queue.append(vertex)


def two_opt(
    dist, t: Tour, cl: CandidateLists, monitor: Optional[CostMonitor] = None
) -> Tour:
    """
    Applies improving 2-exchanges until none is left among the moves
    whose new edge (a, c) has c in the candidate list of a. A vertex
    whose neighbourhood failed to improve is not looked at again until
    one of its tour edges changes.
    """
    n = t.n
    if n < 4:
        return t
    d = as_lookup(dist)
    state = _ArrayTour(t.order)
    cost = t.cost
    queue = deque(state.order)
    queued = [True] * (n + 1)
    while queue:
        a = queue.popleft()
        queued[a] = False
        improved = False
        for forward in (True, False):
            b = state.succ(a) if forward else state.pred(a)
            d_ab = d(a, b)
            for c in cl[a]:
                d_ac = d(a, c)
                if d_ac >= d_ab:
                    break
                e = state.succ(c) if forward else state.pred(c)
                if c == b or e == a:
                    continue
                delta = d_ac + d(b, e) - d_ab - d(c, e)
                if delta >= 0:
                    continue
                if forward:
                    # a b ... c e  ->  a c ... b e
                    state.reverse(state.pos[b], state.pos[c])
                else:
                    # e c ... b a  ->  e b ... c a
                    state.reverse(state.pos[c], state.pos[b])
                cost += delta
                if monitor is not None:
                    monitor(cost)
                _push(queue, queued, a, b, c, e)
                improved = True
                break
            if improved:
                break
    return Tour(order=tuple(state.order), cost=cost)


def _relocate(state: _ArrayTour, first: int, length: int, c: int, e: int, head: int):
    """Moves the segment of `length` vertices starting at `first`
    between the tour neighbours c and e, with `head` next to c"""
    n, start = state.n, state.pos[first]
    rotated = state.order[start:] + state.order[:start]
    segment, rest = rotated[:length], rotated[length:]
    index = (state.pos[c] - start - length) % n
    if head != first:
        segment.reverse()
    if state.succ(c) == e:
        rebuilt = rest[: index + 1] + segment + rest[index + 1 :]
    else:
        segment.reverse()
        rebuilt = rest[:index] + segment + rest[index:]
    state.rebuild(rebuilt)


def or_opt(
    dist, t: Tour, cl: CandidateLists, monitor: Optional[CostMonitor] = None
) -> Tour:
    """
    Relocates segments of one to three consecutive vertices, in either
    orientation, between two tour neighbours c and e where c is in the
    candidate list of a segment end. Stops when no such move improves.
    """
    n = t.n
    if n < 5:
        return t
    d = as_lookup(dist)
    state = _ArrayTour(t.order)
    cost = t.cost
    queue = deque(state.order)
    queued = [True] * (n + 1)
    while queue:
        first = queue.popleft()
        queued[first] = False
        move = None
        for length in range(1, 4):
            if n - length < 3:
                break
            segment = [first]
            for _ in range(length - 1):
                segment.append(state.succ(segment[-1]))
            last = segment[-1]
            p, nx = state.pred(first), state.succ(last)
            removal_gain = d(p, first) + d(last, nx) - d(p, nx)
            if removal_gain <= 0:
                continue
            for head, tail in ((first, last), (last, first)):
                for c in cl[head]:
                    d_head = d(c, head)
                    if d_head >= removal_gain:
                        break
                    if c in segment:
                        continue
                    for e in (state.succ(c), state.pred(c)):
                        if e in segment:
                            continue
                        delta = d_head + d(tail, e) - d(c, e) - removal_gain
                        if delta < 0:
                            move = (length, c, e, head, delta, p, nx, last)
                            break
                    if move is not None:
                        break
                if move is not None:
                    break
            if move is not None:
                break
        if move is None:
            continue
        length, c, e, head, delta, p, nx, last = move
        _relocate(state, first, length, c, e, head)
        cost += delta
        if monitor is not None:
            monitor(cost)
        _push(queue, queued, first, last, p, nx, c, e)
    return Tour(order=tuple(state.order), cost=cost)


def improve(
    dist,
    t: Tour,
    cl: CandidateLists,
    use_or_opt: bool = True,
    monitor: Optional[CostMonitor] = None,
) -> Tour:
    """Alternates two_opt and or_opt until neither improves"""
    t = two_opt(dist, t, cl, monitor)
    while use_or_opt:
        moved = or_opt(dist, t, cl, monitor)
        if moved.cost >= t.cost:
            break
        t = two_opt(dist, moved, cl, monitor)
    return t


@dataclass(frozen=True)
class LocalSearchConfig:

    """Settings of the multi-start local search baseline"""

    k: int = DEFAULT_NEIGHBOURS
    restarts: int = 1
    or_opt: bool = True

    def __post_init__(self):
        if self.k < 1:
            raise InvalidConfig(f"k must be at least 1, got {self.k}")
        if self.restarts < 1:
            raise InvalidConfig(f"restarts must be at least 1, got {self.restarts}")


def local_search_solve(dist, n: int, cfg: LocalSearchConfig, seed: int) -> SolveResult:
    """Nearest neighbour from a random start, improved by 2-opt and
    Or-opt; repeated `restarts` times, keeping the best tour"""
    started = time.perf_counter()
    rng = np.random.default_rng(seed)
    cl = build_candidate_lists(dist, n, min(cfg.k, max(n - 1, 1)))
    best = None
    history = []
    for restart in range(cfg.restarts):
        start = int(rng.integers(1, n + 1))
        tour = improve(dist, nearest_neighbor_tour(dist, n, start, rng), cl, cfg.or_opt)
        if best is None or tour.cost < best.cost:
            best = tour
        history.append((best.cost, float(tour.cost)))
        logger.debug("restart %s: cost=%s best=%s", restart, tour.cost, best.cost)
    return SolveResult(
        best_tour=best,
        best_cost=best.cost,
        generations=cfg.restarts,
        wall_time=time.perf_counter() - started,
        history=history,
        termination="restarts",
    )
