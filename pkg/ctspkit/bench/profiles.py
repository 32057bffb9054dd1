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
Performance profiles compare several algorithms over a set of
instances. For algorithm s on instance p with metric f[s, p], the ratio
r[s, p] = f[s, p] / min_a f[a, p] measures how far s is from the best
algorithm on p, and rho_s(tau) is the share of instances with
r[s, p] <= tau.
"""
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ctspkit.bench.stats import RunStats, gap_percent
from ctspkit.utils.exceptions import InvalidConfig, NonPositiveMetric

COST = "cost"
TIME = "time"
GAP = "gap"
METRICS = [COST, TIME, GAP]

# Wall times below this are reported as this, so that time ratios exist
MIN_TIME = 0.001

Breakpoints = Tuple[Tuple[float, float], ...]


@dataclass(frozen=True)
class PerfProfile:

    algorithms: Tuple[str, ...]
    instances: Tuple[str, ...]
    metrics: np.ndarray
    ratios: np.ndarray
    breakpoints: Dict[str, Breakpoints]

    @property
    def tau_max(self) -> float:
        return float(self.ratios.max())

    def rho(self, algorithm: str, tau: float) -> float:
        """Share of instances on which algorithm is within a factor tau
        of the best"""
        row = self.ratios[self.algorithms.index(algorithm)]
        return float(np.count_nonzero(row <= tau)) / len(self.instances)


def performance_profile(
    metrics,
    algorithms: Optional[Sequence[str]] = None,
    instances: Optional[Sequence[str]] = None,
) -> PerfProfile:
    """Builds the profile of a metric matrix with one row per
    algorithm and one column per instance"""
    values = np.asarray(metrics, dtype=float)
    if values.ndim != 2 or values.shape[0] < 1 or values.shape[1] < 1:
        raise InvalidConfig("need at least one algorithm and one instance")
    if algorithms is None:
        algorithms = [f"s{i + 1}" for i in range(values.shape[0])]
    if instances is None:
        instances = [f"p{j + 1}" for j in range(values.shape[1])]
    if len(algorithms) != values.shape[0] or len(instances) != values.shape[1]:
        raise InvalidConfig(f"names do not match a {values.shape} metric matrix")
    for s, algorithm in enumerate(algorithms):
        for p, instance in enumerate(instances):
            value = values[s, p]
            if not math.isfinite(value) or value <= 0:
                raise NonPositiveMetric(algorithm, instance, value)

    ratios = values / values.min(axis=0, keepdims=True)
    breakpoints = {}
    for s, algorithm in enumerate(algorithms):
        row = ratios[s]
        taus = sorted(set(row.tolist()) | {1.0})
        breakpoints[algorithm] = tuple(
            (tau, float(np.count_nonzero(row <= tau)) / len(instances)) for tau in taus
        )
    return PerfProfile(
        algorithms=tuple(algorithms),
        instances=tuple(instances),
        metrics=values,
        ratios=ratios,
        breakpoints=breakpoints,
    )


def metric_matrix(
    stats: List[RunStats], metric: str = COST
) -> Tuple[List[str], List[str], np.ndarray]:
    """
    Arranges RunStats as an algorithms x instances matrix of average
    cost, mean wall time, or average cost relative to the reference
    (the gap-normalised quality). Instances not run by every algorithm
    are left out.
    """
    if metric not in METRICS:
        raise InvalidConfig(f"unknown metric '{metric}', expected one of {METRICS}")
    table: Dict[Tuple[str, str], float] = {}
    for entry in stats:
        if metric == COST:
            value = float(entry.average)
        elif metric == TIME:
            value = max(entry.mean_time, MIN_TIME)
        else:
            if entry.reference is None:
                continue
            value = 1.0 + float(gap_percent(entry.average, entry.reference)) / 100.0
        table[(entry.algorithm, entry.instance)] = value
    algorithms = sorted({a for a, _ in table})
    instances = sorted(
        {i for _, i in table if all((a, i) in table for a in algorithms)}
    )
    matrix = np.array([[table[(a, i)] for i in instances] for a in algorithms])
    return algorithms, instances, matrix


def emit_profile_plot_data(profile: PerfProfile) -> str:
    """CSV of (tau, rho) points per algorithm, ending at (tau_max, 1)"""
    lines = ["algorithm,tau,rho"]
    tau_max = profile.tau_max
    for algorithm in profile.algorithms:
        points = list(profile.breakpoints[algorithm])
        if tau_max > points[-1][0]:
            points.append((tau_max, profile.rho(algorithm, tau_max)))
        for tau, rho in points:
            lines.append(f"{algorithm},{tau:.6f},{rho:.6f}")
    return "\n".join(lines) + "\n"


def normalized_results(stats: List[RunStats]) -> Dict[str, List[float]]:
    """Per algorithm, 100 * (f_avg - f_ref) / f_ref over every instance
    that has a reference cost, ordered by instance name"""
    normalized: Dict[str, List[float]] = {}
    for entry in sorted(stats, key=lambda e: (e.algorithm, e.instance)):
        if entry.reference is None:
            continue
        gap = float(gap_percent(entry.average, entry.reference))
        normalized.setdefault(entry.algorithm, []).append(gap)
    return normalized


def emit_normalized_data(normalized: Dict[str, List[float]]) -> str:
    lines = ["algorithm,gap_avg"]
    for algorithm in sorted(normalized):
        lines.extend(f"{algorithm},{gap:.4f}" for gap in normalized[algorithm])
    return "\n".join(lines) + "\n"
