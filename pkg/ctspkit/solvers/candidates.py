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
from typing import Tuple

import numpy as np

from ctspkit.instances.distances import distance_row
from ctspkit.utils.exceptions import InvalidConfig

DEFAULT_NEIGHBOURS = 10


@dataclass(frozen=True)
class CandidateLists:

    """
    For every vertex, its k nearest neighbours by the operative
    distance, nearest first, ties broken by vertex id. lists[0] is
    an empty placeholder so that lists[v] belongs to vertex v.
    """

    k: int
    lists: Tuple[Tuple[int, ...], ...]

    def __getitem__(self, vertex: int) -> Tuple[int, ...]:
        return self.lists[vertex]


def build_candidate_lists(dist, n: int, k: int = DEFAULT_NEIGHBOURS) -> CandidateLists:
    """Builds the nearest neighbour lists of every vertex"""
    if n < 2:
        return CandidateLists(k=k, lists=((),) * (n + 1))
    if not 1 <= k <= n - 1:
        raise InvalidConfig(f"candidate list size must be in 1..{n - 1}, got {k}")
    lists = [()]
    for vertex in range(1, n + 1):
        costs = np.array(distance_row(dist, n, vertex), dtype=np.int64)
        others = np.flatnonzero(np.arange(n + 1) != vertex)[1:]
        others_costs = costs[others]
        # Everything tied with the k-th nearest stays in the running
        threshold = np.partition(others_costs, k - 1)[k - 1]
        kept = others[others_costs <= threshold]
        # lexsort sorts by the last key first: cost, then id
        ranked = kept[np.lexsort((kept, costs[kept]))]
        lists.append(tuple(int(v) for v in ranked[:k]))
    return CandidateLists(k=k, lists=tuple(lists))
