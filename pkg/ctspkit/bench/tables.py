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
import csv
import io
from typing import List

from ctspkit.bench.stats import RunStats, format_gap
from ctspkit.instances.references import instance_family

HEADER = ["instance", "family", "algorithm", "reference", "best", "gap_best", "gap_avg", "t(s)"]


def _cells(entry: RunStats) -> List[str]:
    """One table row; shared by the text and CSV renderings"""
    reference = "-" if entry.reference is None else str(entry.reference)
    if entry.gap_best is None:
        gap_best, gap_avg = "-", "-"
    else:
        gap_best = format_gap(entry.gap_best)
        if entry.gap_best == 0 and entry.hits > 0:
            gap_best = f"=({entry.hits})"
        gap_avg = format_gap(entry.gap_avg)
    return [
        entry.instance,
        instance_family(entry.instance),
        entry.algorithm,
        reference,
        str(entry.best),
        gap_best,
        gap_avg,
        f"{entry.mean_time:.1f}",
    ]


def _rows(stats: List[RunStats]) -> List[List[str]]:
    ordered = sorted(stats, key=lambda e: (e.instance, e.algorithm))
    return [_cells(entry) for entry in ordered]


def render_table(stats: List[RunStats]) -> str:
    """Aligned text with one row per (instance, algorithm), ordered by
    instance name; a best gap of zero shows as '=(hits)'"""
    rows = [HEADER] + _rows(stats)
    widths = [max(len(row[c]) for row in rows) for c in range(len(HEADER))]
    lines = []
    for row in rows:
        cells = [
            cell.ljust(width) if c < 3 else cell.rjust(width)
            for c, (cell, width) in enumerate(zip(row, widths))
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def render_csv(stats: List[RunStats]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(HEADER)
    writer.writerows(_rows(stats))
    return buffer.getvalue()
