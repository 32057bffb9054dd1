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
import os
from dataclasses import dataclass

from ctspkit.instances.instance import Instance
from ctspkit.tours.tour import (
    Tour,
    check_permutation,
    cycle_cost,
    inter_cluster_edge_count,
    is_cluster_contiguous,
)
from ctspkit.utils.exceptions import InfeasibleTour, NotAPermutation


@dataclass(frozen=True)
class TourReport:

    """The outcome of checking a tour file against an instance"""

    permutation_ok: bool
    cost_ok: bool
    contiguous: bool
    crossings: int
    cost: int

    @property
    def valid(self) -> bool:
        return self.permutation_ok and self.cost_ok and self.contiguous


def write_tour(tour: Tour) -> str:
    """Renders a tour as 'COST <c>' followed by the vertex ids"""
    vertices = " ".join(str(v) for v in tour.order)
    return f"COST {tour.cost}\n{vertices}\n"


def parse_tour(text: str) -> Tour:
    """Reads the text written by write_tour()"""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) < 1 or not lines[0].upper().startswith("COST"):
        raise InfeasibleTour("tour file must start with a 'COST <integer>' line")
    try:
        cost = int(lines[0].split()[1])
        order = tuple(int(t) for line in lines[1:] for t in line.split())
    except (IndexError, ValueError) as exc:
        raise InfeasibleTour(f"malformed tour file: {exc}") from exc
    return Tour(order=order, cost=cost)


def read_tour(path: str) -> Tour:
    with open(path, "r", encoding="ascii") as lines:
        return parse_tour(lines.read())


def save_tour(tour: Tour, path: str) -> str:
    parent_dir = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent_dir, exist_ok=True)
    with open(path, "w", encoding="ascii") as out:
        out.write(write_tour(tour))
    return path


def validate_tour(inst: Instance, tour: Tour) -> TourReport:
    """Checks that a tour is a permutation, that its stated cost is
    right, and that it visits every cluster contiguously"""
    try:
        check_permutation(tour.order, inst.n)
    except NotAPermutation:
        return TourReport(False, False, False, 0, tour.cost)
    cost = cycle_cost(inst, tour.order)
    return TourReport(
        permutation_ok=True,
        cost_ok=cost == tour.cost,
        contiguous=is_cluster_contiguous(inst, tour),
        crossings=inter_cluster_edge_count(inst, tour),
        cost=cost,
    )
