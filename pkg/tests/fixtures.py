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
from typing import List

import numpy as np
import pytest

from ctspkit.instances.generator import GeneratorConfig, generate_clustered
from ctspkit.instances.instance import Instance

# pylint: disable=missing-function-docstring

TRIANGLE_GTSP = """NAME : triangle
TYPE : GTSP
DIMENSION : 3
GTSP_SETS : 1
EDGE_WEIGHT_TYPE : EUC_2D
NODE_COORD_SECTION
1 0 0
2 3 0
3 0 4
GTSP_SET_SECTION
1 1 2 3 -1
EOF
"""


def random_instance(seed: int, n: int, m: int, size: int = 100) -> Instance:
    """Uniform integer points with a random partition into m nonempty
    clusters"""
    rng = np.random.default_rng(seed)
    coordinates = rng.integers(0, size, size=(n, 2))
    vertices = [int(v) + 1 for v in rng.permutation(n)]
    cuts = []
    if m > 1:
        cuts = sorted(int(c) for c in rng.choice(np.arange(1, n), size=m - 1, replace=False))
    clusters: List[List[int]] = []
    for start, end in zip([0] + cuts, cuts + [n]):
        clusters.append(sorted(vertices[start:end]))
    return Instance.from_coordinates(f"random-{n}-{m}-s{seed}", coordinates, clusters)


def random_order(seed: int, n: int) -> List[int]:
    rng = np.random.default_rng(seed)
    return [int(v) + 1 for v in rng.permutation(n)]


@pytest.fixture(scope="session")
def triangle():
    return Instance.from_coordinates("triangle", [(0, 0), (3, 0), (0, 4)], [[1, 2, 3]])


@pytest.fixture(scope="session")
def unit_square():
    # Sides 1-2 and 3-4 lie inside the clusters
    return Instance.from_coordinates(
        "square", [(0, 0), (1, 0), (1, 1), (0, 1)], [[1, 2], [3, 4]]
    )


@pytest.fixture(scope="session")
def collinear():
    return Instance.from_coordinates("line", [(0, 0), (1, 0), (2, 0), (3, 0)], [[1, 2, 3, 4]])


@pytest.fixture(scope="session")
def equilateral():
    weights = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    return Instance.from_matrix("equilateral", weights, [[1, 2, 3]])


@pytest.fixture(scope="session")
def clustered():
    return generate_clustered(GeneratorConfig(n=40, m=4, seed=7))
