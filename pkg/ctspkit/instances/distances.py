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
from typing import Callable, List, Optional

import numpy as np

from ctspkit.utils.exceptions import InvalidConfig, SelfLoop

# Vertices are 1-based; every array indexed by vertex id carries an
# unused slot at index 0.
DistanceLookup = Callable[[int, int], int]

INT64_MAX = np.iinfo(np.int64).max


class Distances(ABC):

    """
    Distances is the abstract, symmetric, integer cost function over
    the vertices 1..n that every solver in this package consumes.
    """

    __metaclass__ = ABCMeta

    @property
    @abstractmethod
    def n(self) -> int:
        """Number of vertices"""
        raise NotImplementedError()

    @abstractmethod
    def _cost(self, i: int, j: int) -> int:
        """Cost between two distinct, valid vertex ids"""
        raise NotImplementedError()

    @abstractmethod
    def row(self, i: int) -> np.ndarray:
        """Costs from vertex i to every vertex, as an int64 array
        of length n + 1 (index 0 and index i are meaningless)"""
        raise NotImplementedError()

    def matrix(self) -> Optional[np.ndarray]:
        """The padded (n + 1) x (n + 1) cost matrix, or None when
        it is too large to hold in memory"""
        return None

    def __call__(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise InvalidConfig(f"vertex ids ({i}, {j}) outside 1..{self.n}")
        if i == j:
            raise SelfLoop(i)
        return self._cost(i, j)

    def table(self) -> Optional[List[List[int]]]:
        """Nested python lists of the padded matrix, which are
        the fastest structure for scalar lookups in solver loops"""
        matrix = self.matrix()
        if matrix is None:
            return None
        return matrix.tolist()

    def lookup(self) -> DistanceLookup:
        """Returns an unchecked cost function for use in inner loops"""
        rows = self.table()
        if rows is None:
            return self._cost
        return lambda i, j: rows[i][j]


class DistanceMatrix(Distances):

    """
    DistanceMatrix wraps an explicit, symmetric n x n cost matrix
    """

    def __init__(self, weights):
        weights = np.asarray(weights, dtype=np.int64)
        if weights.ndim != 2 or weights.shape[0] != weights.shape[1]:
            raise InvalidConfig(f"distance matrix must be square, got {weights.shape}")
        if not np.array_equal(weights, weights.T):
            raise InvalidConfig("distance matrix must be symmetric")
        if weights.size > 0 and weights.min() < 0:
            raise InvalidConfig("distances must be nonnegative")
        n = weights.shape[0]
        padded = np.zeros((n + 1, n + 1), dtype=np.int64)
        padded[1:, 1:] = weights
        padded.setflags(write=False)
        self._padded = padded
        self._rows = None

    @property
    def n(self) -> int:
        return self._padded.shape[0] - 1

    def _cost(self, i: int, j: int) -> int:
        return int(self._padded[i, j])

    def row(self, i: int) -> np.ndarray:
        return self._padded[i]

    def matrix(self) -> Optional[np.ndarray]:
        return self._padded

    def table(self) -> Optional[List[List[int]]]:
        if self._rows is None:
            self._rows = self._padded.tolist()
        return self._rows


def as_lookup(dist) -> DistanceLookup:
    """Accepts a Distances object or any plain callable"""
    if isinstance(dist, Distances):
        return dist.lookup()
    return dist


def distance_row(dist, n: int, i: int) -> np.ndarray:
    """Costs from i to every vertex, for Distances objects and
    plain callables alike"""
    if isinstance(dist, Distances):
        matrix = dist.matrix()
        return dist.row(i) if matrix is None else matrix[i]
    row = np.zeros(n + 1, dtype=np.int64)
    for j in range(1, n + 1):
        if j != i:
            row[j] = dist(i, j)
    return row
