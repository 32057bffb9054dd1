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
from dataclasses import dataclass, replace
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ctspkit.utils.exceptions import ZeroReference

REPORT_DECIMALS = 4

# Where a RunStats reference cost came from
PUBLISHED = "published"
MANIFEST = "manifest"
SESSION_BEST = "session-best"


def gap_percent(f: int, f_ref: int) -> Fraction:
    """100 * (f - f_ref) / f_ref, exactly; negative when f beats the
    reference"""
    if f_ref <= 0:
        raise ZeroReference(f_ref)
    return Fraction(100 * (f - f_ref)) / Fraction(f_ref)


def format_gap(gap: Fraction, decimals: int = REPORT_DECIMALS) -> str:
    """Rounds half away from zero to a fixed number of decimals"""
    exact = Decimal(gap.numerator) / Decimal(gap.denominator)
    return str(exact.quantize(Decimal(1).scaleb(-decimals), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class Run:

    cost: int
    wall_time: float
    seed: Optional[int] = None


@dataclass(frozen=True)
class RunStats:

    """
    The runs of one algorithm on one instance. Everything but the raw
    runs and the reference is derived on access.
    """

    instance: str
    algorithm: str
    runs: Tuple[Run, ...]
    reference: Optional[int] = None
    reference_source: Optional[str] = None

    @property
    def costs(self) -> List[int]:
        return [run.cost for run in self.runs]

    @property
    def best(self) -> int:
        return min(self.costs)

    @property
    def average(self) -> Fraction:
        return Fraction(sum(self.costs), len(self.runs))

    @property
    def mean_time(self) -> float:
        return sum(run.wall_time for run in self.runs) / len(self.runs)

    @property
    def gap_best(self) -> Optional[Fraction]:
        if self.reference is None:
            return None
        return gap_percent(self.best, self.reference)

    @property
    def gap_avg(self) -> Optional[Fraction]:
        if self.reference is None:
            return None
        return gap_percent(self.average, self.reference)

    @property
    def hits(self) -> int:
        if self.reference is None:
            return 0
        return sum(1 for cost in self.costs if cost == self.reference)

    def with_run(self, run: Run) -> "RunStats":
        return replace(self, runs=self.runs + (run,))

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "algorithm": self.algorithm,
            "runs": [
                {"cost": r.cost, "wall_time": r.wall_time, "seed": r.seed}
                for r in self.runs
            ],
            "reference": self.reference,
            "reference_source": self.reference_source,
        }

    @classmethod
    def from_dict(cls, values: dict) -> "RunStats":
        return cls(
            instance=values["instance"],
            algorithm=values["algorithm"],
            runs=tuple(
                Run(cost=int(r["cost"]), wall_time=float(r["wall_time"]), seed=r.get("seed"))
                for r in values["runs"]
            ),
            reference=values.get("reference"),
            reference_source=values.get("reference_source"),
        )


def fill_missing_references(stats: List[RunStats]) -> List[RunStats]:
    """Gives every instance without a reference cost the best cost
    found on it by any algorithm in the session"""
    session_best: Dict[str, int] = {}
    for entry in stats:
        best = session_best.get(entry.instance)
        session_best[entry.instance] = entry.best if best is None else min(best, entry.best)
    return [
        entry
        if entry.reference is not None
        else replace(
            entry,
            reference=session_best[entry.instance],
            reference_source=SESSION_BEST,
        )
        for entry in stats
    ]
