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
from bisect import bisect_right
from typing import Dict, List, Sequence, Tuple

from ctspkit.instances.distances import as_lookup
from ctspkit.tours.tour import Tour
from ctspkit.utils.exceptions import InconsistentESet

Edge = Tuple[int, int]


def other_neighbor(neighbours: Sequence[int], came_from: int) -> int:
    """The neighbour that is left after dropping one occurrence of
    came_from; a doubled edge leads straight back"""
    if neighbours[0] == came_from:
        return neighbours[1]
    return neighbours[0]


class Intermediate(ABC):

    """
    Intermediate is an edge set over the vertices 1..n in which every
    vertex has degree exactly two, so it decomposes into one or more
    disjoint subtours. Subtours are numbered 0..subtour_count - 1.
    """

    __metaclass__ = ABCMeta

    def __init__(self, n: int):
        self.n = n

    @abstractmethod
    def neighbors(self, vertex: int) -> Tuple[int, int]:
        """The two endpoints adjacent to vertex, with multiplicity"""
        raise NotImplementedError()

    @abstractmethod
    def label(self, vertex: int) -> int:
        """The id of the subtour that contains vertex"""
        raise NotImplementedError()

    @property
    @abstractmethod
    def subtour_count(self) -> int:
        raise NotImplementedError()

    @abstractmethod
    def subtour_size(self, subtour: int) -> int:
        raise NotImplementedError()

    @abstractmethod
    def subtour_members(self, subtour: int) -> List[int]:
        """The vertices of one subtour, in no particular order"""
        raise NotImplementedError()

    @abstractmethod
    def edge_cost(self, dist) -> int:
        """Total cost of all edges of the intermediate"""
        raise NotImplementedError()

    def subtours(self) -> List[List[int]]:
        """Every subtour as a vertex list in cyclic order"""
        cycles = []
        for subtour in range(self.subtour_count):
            start = min(self.subtour_members(subtour))
            cycle = [start]
            previous, current = start, self.neighbors(start)[0]
            while current != start:
                cycle.append(current)
                previous, current = current, other_neighbor(self.neighbors(current), previous)
            cycles.append(cycle)
        return cycles

    def is_degree_two(self) -> bool:
        return all(len(self.neighbors(v)) == 2 for v in range(1, self.n + 1))


class AdjacencyIntermediate(Intermediate):

    """
    An intermediate given by an explicit adjacency map, where a pair of
    vertices joined by a doubled edge is a subtour of its own
    """

    def __init__(self, adjacency: Dict[int, Sequence[int]]):
        super().__init__(len(adjacency))
        self._adjacency = [()] * (self.n + 1)
        for vertex, neighbours in adjacency.items():
            if not 1 <= vertex <= self.n:
                raise InconsistentESet(f"vertex {vertex} outside 1..{self.n}")
            if len(neighbours) != 2:
                raise InconsistentESet(
                    f"vertex {vertex} has degree {len(neighbours)}, expected 2"
                )
            self._adjacency[vertex] = tuple(int(u) for u in neighbours)
        self._labels = [-1] * (self.n + 1)
        self._members = []
        for start in range(1, self.n + 1):
            if self._labels[start] >= 0:
                continue
            members = [start]
            self._labels[start] = len(self._members)
            previous, current = start, self._adjacency[start][0]
            while current != start:
                if self._labels[current] >= 0:
                    raise InconsistentESet(f"vertex {current} closes no cycle")
                self._labels[current] = len(self._members)
                members.append(current)
                previous, current = current, other_neighbor(self._adjacency[current], previous)
            self._members.append(members)

    def neighbors(self, vertex: int) -> Tuple[int, int]:
        return self._adjacency[vertex]

    def label(self, vertex: int) -> int:
        return self._labels[vertex]

    @property
    def subtour_count(self) -> int:
        return len(self._members)

    def subtour_size(self, subtour: int) -> int:
        return len(self._members[subtour])

    def subtour_members(self, subtour: int) -> List[int]:
        return list(self._members[subtour])

    def edge_cost(self, dist) -> int:
        d = as_lookup(dist)
        total = sum(
            d(v, u) for v in range(1, self.n + 1) for u in self._adjacency[v] if u != v
        )
        return total // 2


class SegmentIntermediate(Intermediate):

    """
    SegmentIntermediate is a parent tour with some of its edges removed
    and other edges added. The removed edges cut the parent into
    segments of consecutive positions; only segment end points have
    changed neighbours, so subtours are found by walking from segment
    to segment instead of from vertex to vertex.
    """

    def __init__(self, parent: Tour, removed: Sequence[Edge], added: Sequence[Edge]):
        super().__init__(parent.n)
        self.parent = parent
        self.removed = tuple(removed)
        self.added = tuple(added)
        n, order, pos = parent.n, parent.order, parent.position

        cuts = set()
        for u, v in self.removed:
            pu, pv = int(pos[u]), int(pos[v])
            if order[(pu + 1) % n] == v:
                cut = pv
            elif order[(pv + 1) % n] == u:
                cut = pu
            else:
                raise InconsistentESet(f"edge ({u}, {v}) is not in the parent tour")
            if cut in cuts:
                raise InconsistentESet(f"edge ({u}, {v}) removed twice")
            cuts.add(cut)
        self._cut_set = cuts
        self._cuts = sorted(cuts)

        extra: Dict[int, List[int]] = {}
        for u, v in self.added:
            extra.setdefault(u, []).append(v)
            extra.setdefault(v, []).append(u)
        self._overrides: Dict[int, Tuple[int, ...]] = {}
        for u, v in self.removed:
            for vertex in (u, v):
                if vertex not in self._overrides:
                    self._overrides[vertex] = self._rewire(vertex, extra.get(vertex, []))
        for vertex in extra:
            if vertex not in self._overrides:
                raise InconsistentESet(f"vertex {vertex} gains an edge but loses none")

        self._decompose()

    def _rewire(self, vertex: int, gained: List[int]) -> Tuple[int, ...]:
        n, order = self.n, self.parent.order
        p = int(self.parent.position[vertex])
        kept = []
        if p not in self._cut_set:
            kept.append(order[p - 1])
        if (p + 1) % n not in self._cut_set:
            kept.append(order[(p + 1) % n])
        neighbours = tuple(kept + gained)
        if len(neighbours) != 2:
            raise InconsistentESet(
                f"vertex {vertex} has degree {len(neighbours)}, expected 2"
            )
        return neighbours

    def _segment_bounds(self, segment: int) -> Tuple[int, int]:
        """First and last position of a segment; the last one may
        exceed n - 1 for the segment that wraps around"""
        cuts = self._cuts
        start = cuts[segment]
        if segment + 1 < len(cuts):
            return start, cuts[segment + 1] - 1
        return start, cuts[0] - 1 + self.n

    def segment_of(self, vertex: int) -> int:
        position = int(self.parent.position[vertex])
        return (bisect_right(self._cuts, position) - 1) % len(self._cuts)

    def _segment_vertices(self, segment: int) -> List[int]:
        order, n = self.parent.order, self.n
        start, end = self._segment_bounds(segment)
        if end < n:
            return list(order[start : end + 1])
        return list(order[start:]) + list(order[: end - n + 1])

    def _decompose(self):
        n, order = self.n, self.parent.order
        k = len(self._cuts)
        if k == 0:
            self._segment_labels = []
            self._members = [[0]]
            self._sizes = [n]
            return
        heads, tails, lengths = [], [], []
        for segment in range(k):
            start, end = self._segment_bounds(segment)
            heads.append(order[start])
            tails.append(order[end % n])
            lengths.append(end - start + 1)

        labels = [-1] * k
        self._members, self._sizes = [], []
        for first in range(k):
            if labels[first] >= 0:
                continue
            subtour = len(self._members)
            segments, size = [], 0
            segment, forward, came_from = first, True, None
            while True:
                labels[segment] = subtour
                segments.append(segment)
                size += lengths[segment]
                if lengths[segment] == 1:
                    vertex = heads[segment]
                    links = self._overrides[vertex]
                    target = links[0] if came_from is None else other_neighbor(links, came_from)
                else:
                    vertex = tails[segment] if forward else heads[segment]
                    p = int(self.parent.position[vertex])
                    inside = order[p - 1] if forward else order[(p + 1) % n]
                    target = other_neighbor(self._overrides[vertex], inside)
                came_from = vertex
                segment = self.segment_of(target)
                forward = target == heads[segment]
                if segment == first:
                    break
            self._members.append(segments)
            self._sizes.append(size)
        self._segment_labels = labels

    def neighbors(self, vertex: int) -> Tuple[int, int]:
        rewired = self._overrides.get(vertex)
        if rewired is not None:
            return rewired
        return self.parent.pred(vertex), self.parent.succ(vertex)

    def label(self, vertex: int) -> int:
        if not self._cuts:
            return 0
        return self._segment_labels[self.segment_of(vertex)]

    @property
    def subtour_count(self) -> int:
        return len(self._members)

    def subtour_size(self, subtour: int) -> int:
        return self._sizes[subtour]

    def subtour_members(self, subtour: int) -> List[int]:
        if not self._cuts:
            return list(self.parent.order)
        members = []
        for segment in self._members[subtour]:
            members.extend(self._segment_vertices(segment))
        return members

    def edge_cost(self, dist) -> int:
        d = as_lookup(dist)
        removed = sum(d(u, v) for u, v in self.removed)
        added = sum(d(u, v) for u, v in self.added)
        return self.parent.cost - removed + added
