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
import numpy as np
import pytest

from ctspkit.solvers.eax import (
    Strategy,
    apply_eset,
    build_union_graph,
    extract_ab_cycles,
    select_eset,
)
from ctspkit.solvers.intermediate import AdjacencyIntermediate, SegmentIntermediate
from ctspkit.tours.tour import Tour
from ctspkit.utils.exceptions import InconsistentESet

# pylint: disable=unused-import
from tests.fixtures import random_instance, random_order

# pylint: disable=missing-function-docstring


def _key(u, v):
    return (u, v) if u < v else (v, u)


def _adjacency(parent: Tour, removed, added) -> dict:
    adjacency = {v: [] for v in parent.order}
    gone = [_key(u, v) for u, v in removed]
    for u, v in parent.edges():
        if _key(u, v) in gone:
            gone.remove(_key(u, v))
            continue
        adjacency[u].append(v)
        adjacency[v].append(u)
    for u, v in added:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return adjacency


def _partition(intermediate) -> set:
    return {
        frozenset(intermediate.subtour_members(s)) for s in range(intermediate.subtour_count)
    }


def test_adjacency_intermediate():
    intermediate = AdjacencyIntermediate({1: (2, 2), 2: (1, 1), 3: (4, 5), 4: (5, 3), 5: (3, 4)})
    assert intermediate.subtour_count == 2
    assert sorted(sorted(c) for c in intermediate.subtours()) == [[1, 2], [3, 4, 5]]
    assert intermediate.label(4) == intermediate.label(5)
    assert intermediate.label(1) != intermediate.label(3)
    assert intermediate.subtour_size(intermediate.label(3)) == 3
    assert intermediate.is_degree_two()
    assert intermediate.edge_cost(lambda i, j: 1) == 5


def test_adjacency_intermediate_degree():
    with pytest.raises(InconsistentESet):
        AdjacencyIntermediate({1: (2,), 2: (1,)})


def test_segment_intermediate_without_changes():
    parent = Tour(order=(3, 1, 4, 2, 5), cost=11)
    intermediate = SegmentIntermediate(parent, [], [])
    assert intermediate.subtour_count == 1
    assert sorted(intermediate.subtour_members(0)) == [1, 2, 3, 4, 5]
    assert intermediate.neighbors(4) == (1, 2)
    assert intermediate.label(5) == 0
    assert intermediate.edge_cost(lambda i, j: 100) == 11


def test_segment_intermediate_splits_in_two():
    parent = Tour(order=(1, 2, 3, 4, 5, 6), cost=6)
    # (1 2 3)(4 5 6): drop 3-4 and 6-1, close both halves
    intermediate = SegmentIntermediate(parent, [(3, 4), (6, 1)], [(3, 1), (6, 4)])
    assert _partition(intermediate) == {frozenset({1, 2, 3}), frozenset({4, 5, 6})}
    assert set(intermediate.neighbors(1)) == {2, 3}
    assert intermediate.edge_cost(lambda i, j: 1) == 6
    assert sorted(sorted(c) for c in intermediate.subtours()) == [[1, 2, 3], [4, 5, 6]]


def test_segment_intermediate_single_vertex_segments():
    parent = Tour(order=(1, 2, 3, 4), cost=4)
    # 1-2-3-4 becomes 1-3-2-4
    intermediate = SegmentIntermediate(parent, [(1, 2), (3, 4)], [(1, 3), (2, 4)])
    assert intermediate.subtour_count == 1
    assert intermediate.is_degree_two()


@pytest.mark.parametrize(
    "removed,added",
    [
        ([(1, 3)], []),
        ([(1, 2), (2, 1)], [(1, 3), (2, 4)]),
        ([(1, 2)], [(1, 3)]),
        ([(1, 2)], [(1, 3), (2, 3)]),
    ],
)
def test_segment_intermediate_inconsistent(removed, added):
    parent = Tour(order=(1, 2, 3, 4, 5), cost=5)
    with pytest.raises(InconsistentESet):
        SegmentIntermediate(parent, removed, added)


@pytest.mark.parametrize("n", [20, 50, 100])
def test_segments_agree_with_adjacency_walk(n):
    inst = random_instance(n, n, 1)
    rng = np.random.default_rng(n)
    for trial in range(60):
        sa = Tour.from_order(inst, random_order(2 * trial, n))
        sb = Tour.from_order(inst, random_order(2 * trial + 1, n))
        cycles = extract_ab_cycles(build_union_graph(sa, sb), rng)
        strategy = Strategy.k_multiple(int(rng.integers(1, 6)))
        eset = select_eset(cycles, strategy, rng)
        segmented = apply_eset(sa, eset)
        removed = [e for c in eset.cycles for e in c.a_edges()]
        added = [e for c in eset.cycles for e in c.b_edges()]
        walked = AdjacencyIntermediate(_adjacency(sa, removed, added))
        assert _partition(segmented) == _partition(walked)
        assert segmented.edge_cost(inst) == walked.edge_cost(inst)
        for v in range(1, n + 1):
            assert sorted(segmented.neighbors(v)) == sorted(walked.neighbors(v))
            members = segmented.subtour_members(segmented.label(v))
            assert v in members
            assert segmented.subtour_size(segmented.label(v)) == len(members)
