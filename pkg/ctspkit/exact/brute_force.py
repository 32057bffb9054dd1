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
import itertools
import math
from typing import Dict, List, Sequence, Tuple

from ctspkit.instances.distances import DistanceLookup, as_lookup
from ctspkit.instances.instance import Instance
from ctspkit.tours.tour import Tour, canonicalize
from ctspkit.utils.exceptions import TooLarge

TSP_LIMIT = 12
CTSP_LIMIT = 10**7

Path = Tuple[int, List[int]]


def _held_karp(d: DistanceLookup, vertices: Sequence[int], start: int) -> Dict[int, Path]:
    """Cheapest Hamiltonian path over `vertices` from start to every
    other vertex, by dynamic programming over subsets"""
    others = [v for v in vertices if v != start]
    if not others:
        return {start: (0, [start])}
    size = len(others)
    # best[(mask, j)] = (cost, previous index) for paths from start
    # through the vertices in mask, ending at others[j]
    best = {}
    for j, v in enumerate(others):
        best[(1 << j, j)] = (d(start, v), -1)
    for mask in range(1, 1 << size):
        for j in range(size):
            entry = best.get((mask, j))
            if entry is None:
                continue
            for nxt in range(size):
                if mask & (1 << nxt):
                    continue
                key = (mask | (1 << nxt), nxt)
                cost = entry[0] + d(others[j], others[nxt])
                if key not in best or cost < best[key][0]:
                    best[key] = (cost, j)
    full = (1 << size) - 1
    paths = {}
    for j, end in enumerate(others):
        cost = best[(full, j)][0]
        path, mask, current = [], full, j
        while current != -1:
            path.append(others[current])
            previous = best[(mask, current)][1]
            mask &= ~(1 << current)
            current = previous
        paths[end] = (cost, [start] + path[::-1])
    return paths


def brute_force_tsp(dist, n: int) -> Tuple[Tour, int]:
    """The optimal Hamiltonian cycle of a tiny instance"""
    if n > TSP_LIMIT:
        raise TooLarge("brute force TSP", n, TSP_LIMIT)
    if n < 3:
        tour = canonicalize(Tour.from_order(dist, range(1, n + 1)))
        return tour, tour.cost
    d = as_lookup(dist)
    paths = _held_karp(d, range(1, n + 1), 1)
    cost, path = min(
        ((c + d(end, 1), p) for end, (c, p) in paths.items()), key=lambda x: (x[0], x[1])
    )
    tour = canonicalize(Tour(order=tuple(path), cost=cost))
    return tour, cost


def enumeration_size(inst: Instance) -> int:
    """m! times the product of (|V_k| - 1)! over all clusters"""
    size = math.factorial(inst.m)
    for cluster in inst.clusters:
        size *= math.factorial(len(cluster) - 1)
    return size


def brute_force_ctsp(inst: Instance) -> Tuple[Tour, int]:
    """
    The optimal cluster-contiguous tour of a tiny instance. Cheapest
    paths between every entry and exit vertex of each cluster are
    found first; cluster orders are then enumerated with the first
    cluster fixed in front.
    """
    size = enumeration_size(inst)
    if size > CTSP_LIMIT:
        raise TooLarge("brute force CTSP enumeration", size, CTSP_LIMIT)
    d = as_lookup(inst)
    if inst.m == 1:
        if inst.n < 3:
            tour = canonicalize(Tour.from_order(inst, range(1, inst.n + 1)))
            return tour, tour.cost
        paths = _held_karp(d, inst.clusters[0], inst.clusters[0][0])
        first = inst.clusters[0][0]
        cost, path = min(
            (c + d(end, first), p) for end, (c, p) in paths.items()
        )
        tour = canonicalize(Tour(order=tuple(path), cost=cost))
        return tour, cost

    # inside[k][(a, b)]: cheapest path through cluster k from a to b
    inside = []
    for cluster in inst.clusters:
        pairs = {}
        for a in cluster:
            for b, path in _held_karp(d, cluster, a).items():
                pairs[(a, b)] = path
        inside.append(pairs)

    best = None
    for rest in itertools.permutations(range(1, inst.m)):
        sequence = (0,) + rest
        for (a0, b0), (c0, p0) in sorted(inside[0].items()):
            # frontier[exit] = (cost so far, vertices so far)
            frontier = {b0: (c0, p0)}
            for k in sequence[1:]:
                step = {}
                for exit_vertex, (cost, path) in frontier.items():
                    for (a, b), (c, p) in inside[k].items():
                        total = cost + d(exit_vertex, a) + c
                        if b not in step or total < step[b][0]:
                            step[b] = (total, path + p)
                frontier = step
            for exit_vertex, (cost, path) in frontier.items():
                total = cost + d(exit_vertex, a0)
                if best is None or total < best[0]:
                    best = (total, path)
    tour = canonicalize(Tour(order=tuple(best[1]), cost=best[0]))
    return tour, best[0]
