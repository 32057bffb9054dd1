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
import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ctspkit.instances.distances import INT64_MAX, Distances
from ctspkit.utils import environment
from ctspkit.utils.exceptions import InvalidConfig, PartitionError

# Rows of the pairwise scan used for the maximum distance of
# coordinate instances that are too large for a full matrix
_SCAN_CHUNK = 512


class DistanceKind(Enum):

    """DistanceKind enumerates how an instance defines its costs"""

    EUC_2D_ROUNDED: str = "EUC_2D"
    EXPLICIT_MATRIX: str = "EXPLICIT"


def euclidean_rounded(dx, dy):
    """TSPLIB nearest-integer rule: floor(sqrt(dx^2 + dy^2) + 0.5)"""
    return np.floor(np.hypot(dx, dy) + 0.5).astype(np.int64)


@dataclass(frozen=True, eq=False)
class Instance(Distances):

    """
    Instance is a clustered TSP instance: vertices 1..n, given either
    by 2D coordinates or by an explicit symmetric cost matrix, and a
    partition of those vertices into m clusters. Use the from_
    constructors to build one.
    """

    name: str
    clusters: Tuple[Tuple[int, ...], ...]
    distance_kind: DistanceKind
    # (n, 2) float array when distance_kind is EUC_2D_ROUNDED
    coordinates: Optional[np.ndarray] = None
    # (n, n) int64 array when distance_kind is EXPLICIT_MATRIX
    weights: Optional[np.ndarray] = None
    comment: str = ""

    @classmethod
    def from_coordinates(
        cls,
        name: str,
        coordinates: Sequence[Sequence[float]],
        clusters: Sequence[Sequence[int]],
        comment: str = "",
    ) -> "Instance":
        """Creates an EUC_2D instance from (x, y) pairs; vertex k + 1
        is at coordinates[k]"""
        coords = np.array(coordinates, dtype=np.float64).reshape(-1, 2)
        return cls(
            name=name,
            clusters=_as_clusters(clusters),
            distance_kind=DistanceKind.EUC_2D_ROUNDED,
            coordinates=coords,
            comment=comment,
        )

    @classmethod
    def from_matrix(
        cls,
        name: str,
        weights: Sequence[Sequence[int]],
        clusters: Sequence[Sequence[int]],
        comment: str = "",
    ) -> "Instance":
        """Creates an instance from an explicit symmetric n x n matrix"""
        return cls(
            name=name,
            clusters=_as_clusters(clusters),
            distance_kind=DistanceKind.EXPLICIT_MATRIX,
            weights=np.array(weights, dtype=np.int64),
            comment=comment,
        )

    def __post_init__(self):
        if self.distance_kind == DistanceKind.EUC_2D_ROUNDED:
            if self.coordinates is None or self.weights is not None:
                raise InvalidConfig("EUC_2D instances are defined by coordinates only")
            if not np.all(np.isfinite(self.coordinates)):
                raise InvalidConfig("coordinates must be finite")
            self.coordinates.setflags(write=False)
        else:
            if self.weights is None or self.coordinates is not None:
                raise InvalidConfig("EXPLICIT instances are defined by a matrix only")
            _validate_matrix(self.weights)
            self.weights.setflags(write=False)
        _validate_partition(self.clusters, self.n)
        if self.n * self.max_distance >= INT64_MAX:
            raise InvalidConfig(
                f"n x max distance ({self.n} x {self.max_distance}) overflows 64 bits"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            self.name == other.name
            and self.distance_kind == other.distance_kind
            and self.clusters == other.clusters
            and self.comment == other.comment
            and _arrays_equal(self.coordinates, other.coordinates)
            and _arrays_equal(self.weights, other.weights)
        )

    __hash__ = None

    @property
    def n(self) -> int:
        if self.coordinates is not None:
            return self.coordinates.shape[0]
        return self.weights.shape[0]

    @property
    def m(self) -> int:
        return len(self.clusters)

    @cached_property
    def cluster_of(self) -> np.ndarray:
        """0-based cluster index of every vertex (slot 0 is -1)"""
        labels = np.full(self.n + 1, -1, dtype=np.int64)
        for k, cluster in enumerate(self.clusters):
            labels[list(cluster)] = k
        labels.setflags(write=False)
        return labels

    @cached_property
    def _padded_coordinates(self) -> np.ndarray:
        padded = np.zeros((self.n + 1, 2), dtype=np.float64)
        padded[1:] = self.coordinates
        return padded

    @cached_property
    def _matrix(self) -> Optional[np.ndarray]:
        if self.n > environment.matrix_limit():
            return None
        padded = np.zeros((self.n + 1, self.n + 1), dtype=np.int64)
        if self.distance_kind == DistanceKind.EXPLICIT_MATRIX:
            padded[1:, 1:] = self.weights
        else:
            xy = self._padded_coordinates
            padded[:, :] = euclidean_rounded(
                xy[:, 0][:, None] - xy[:, 0][None, :],
                xy[:, 1][:, None] - xy[:, 1][None, :],
            )
            padded[0, :] = 0
            padded[:, 0] = 0
        np.fill_diagonal(padded, 0)
        padded.setflags(write=False)
        return padded

    @cached_property
    def _table(self) -> Optional[List[List[int]]]:
        matrix = self._matrix
        return None if matrix is None else matrix.tolist()

    @cached_property
    def max_distance(self) -> int:
        """The largest pairwise cost c_max"""
        if self.n < 2:
            return 0
        if self.distance_kind == DistanceKind.EXPLICIT_MATRIX:
            return int(self.weights.max())
        if self._matrix is not None:
            return int(self._matrix.max())
        xy = self.coordinates
        best = 0
        for start in range(0, self.n, _SCAN_CHUNK):
            block = xy[start : start + _SCAN_CHUNK]
            costs = euclidean_rounded(
                block[:, 0][:, None] - xy[:, 0][None, :],
                block[:, 1][:, None] - xy[:, 1][None, :],
            )
            best = max(best, int(costs.max()))
        return best

    def _cost(self, i: int, j: int) -> int:
        table = self._table
        if table is not None:
            return table[i][j]
        if self.distance_kind == DistanceKind.EXPLICIT_MATRIX:
            return int(self.weights[i - 1, j - 1])
        xy = self._padded_coordinates
        return int(
            math.floor(math.hypot(xy[i, 0] - xy[j, 0], xy[i, 1] - xy[j, 1]) + 0.5)
        )

    def row(self, i: int) -> np.ndarray:
        if self._matrix is not None:
            return self._matrix[i]
        if self.distance_kind == DistanceKind.EXPLICIT_MATRIX:
            costs = np.zeros(self.n + 1, dtype=np.int64)
            costs[1:] = self.weights[i - 1]
            return costs
        xy = self._padded_coordinates
        costs = euclidean_rounded(xy[:, 0] - xy[i, 0], xy[:, 1] - xy[i, 1])
        costs[0] = 0
        return costs

    def matrix(self) -> Optional[np.ndarray]:
        return self._matrix

    def table(self) -> Optional[List[List[int]]]:
        return self._table


def distance(inst: Instance, i: int, j: int) -> int:
    """The integer travel cost c_ij between two distinct vertices"""
    return inst(i, j)


def cluster_of(inst: Instance, vertex: int) -> int:
    """0-based index of the cluster that contains vertex"""
    return int(inst.cluster_of[vertex])


def max_distance(inst: Instance) -> int:
    """The largest pairwise cost of an instance"""
    return inst.max_distance


def _as_clusters(clusters: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in cluster) for cluster in clusters)


def _arrays_equal(left: Optional[np.ndarray], right: Optional[np.ndarray]) -> bool:
    if left is None or right is None:
        return left is None and right is None
    return np.array_equal(left, right)


def _validate_matrix(weights: np.ndarray):
    if weights.ndim != 2 or weights.shape[0] != weights.shape[1]:
        raise InvalidConfig(f"distance matrix must be square, got {weights.shape}")
    if not np.array_equal(weights, weights.T):
        raise InvalidConfig("distance matrix must be symmetric")
    off_diagonal = ~np.eye(weights.shape[0], dtype=bool)
    if np.any(weights[off_diagonal] < 0):
        raise InvalidConfig("distances must be nonnegative")


def _validate_partition(clusters: Tuple[Tuple[int, ...], ...], n: int):
    if not 1 <= len(clusters) <= n:
        raise PartitionError(f"expected 1 <= m <= n={n}, got m={len(clusters)}")
    counts = np.zeros(n + 1, dtype=np.int64)
    for k, cluster in enumerate(clusters):
        if len(cluster) == 0:
            raise PartitionError(f"cluster {k + 1} is empty")
        for vertex in cluster:
            if not 1 <= vertex <= n:
                raise PartitionError(f"vertex {vertex} is outside 1..{n}")
            counts[vertex] += 1
    missing = np.flatnonzero(counts[1:] == 0) + 1
    if missing.size > 0:
        raise PartitionError(f"vertex {int(missing[0])} is in no cluster")
    repeated = np.flatnonzero(counts[1:] > 1) + 1
    if repeated.size > 0:
        raise PartitionError(f"vertex {int(repeated[0])} is in more than one cluster")
