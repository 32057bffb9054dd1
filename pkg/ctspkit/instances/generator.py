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

import numpy as np

from ctspkit.instances.instance import Instance
from ctspkit.utils.exceptions import InvalidConfig
from ctspkit.utils.log import logger

# Cluster centres must be this many spreads apart
_CENTER_SEPARATION = 4.0
_CENTER_ATTEMPTS = 100


@dataclass(frozen=True)
class GeneratorConfig:

    """Parameters of a synthetic, sharply clustered instance"""

    n: int
    m: int
    cluster_spread: float = 20.0
    field_size: float = 1000.0
    seed: int = 0

    def __post_init__(self):
        if self.m < 1 or self.n < self.m:
            raise InvalidConfig(f"need n >= m >= 1, got n={self.n}, m={self.m}")
        if self.cluster_spread <= 0:
            raise InvalidConfig("cluster_spread must be positive")
        if self.field_size <= 0:
            raise InvalidConfig("field_size must be positive")


def generate_clustered(cfg: GeneratorConfig) -> Instance:
    """Generates a clustered instance: m centres drawn uniformly in the
    field and n points scattered around them with a normal distribution.
    Vertex ids are shuffled so clusters are not id ranges."""
    rng = np.random.default_rng(cfg.seed)
    centers = _draw_centers(cfg, rng)

    sizes = [cfg.n // cfg.m + (1 if k < cfg.n % cfg.m else 0) for k in range(cfg.m)]
    points = []
    labels = []
    for k, size in enumerate(sizes):
        scattered = rng.normal(loc=centers[k], scale=cfg.cluster_spread, size=(size, 2))
        points.append(np.rint(scattered))
        labels += [k] * size
    points = np.vstack(points)

    order = rng.permutation(cfg.n)
    coordinates = points[order]
    clusters = [[] for _ in range(cfg.m)]
    for vertex, source in enumerate(order, start=1):
        clusters[labels[source]].append(vertex)

    name = f"gen-{cfg.n}-{cfg.m}-s{cfg.seed}"
    logger.debug("Generated %s", name)
    return Instance.from_coordinates(name, coordinates, clusters)


def _draw_centers(cfg: GeneratorConfig, rng: np.random.Generator) -> np.ndarray:
    min_separation = _CENTER_SEPARATION * cfg.cluster_spread
    centers = rng.uniform(0.0, cfg.field_size, size=(cfg.m, 2))
    for _ in range(_CENTER_ATTEMPTS):
        if _min_separation(centers) >= min_separation:
            return centers
        centers = rng.uniform(0.0, cfg.field_size, size=(cfg.m, 2))
    logger.debug("Could not separate %d cluster centres; using last draw", cfg.m)
    return centers


def _min_separation(centers: np.ndarray) -> float:
    if centers.shape[0] < 2:
        return np.inf
    deltas = centers[:, None, :] - centers[None, :, :]
    gaps = np.hypot(deltas[..., 0], deltas[..., 1])
    gaps[np.diag_indices_from(gaps)] = np.inf
    return float(gaps.min())
