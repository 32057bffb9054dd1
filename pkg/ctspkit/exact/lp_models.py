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
Integer programming models of the clustered TSP, written out in the
CPLEX LP text format for external MIP solvers.

Both models use binaries x_i_j (arc i -> j is taken), assignment rows
for every vertex, and one row per cluster forcing |V_k| - 1 arcs to
run inside the cluster. Subtours are eliminated either with
Miller-Tucker-Zemlin ordering variables u_i (mtz) or with one unit
flow y_k_i_j from vertex 1 to every other vertex k (mcf).
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ctspkit.instances.instance import Instance
from ctspkit.utils.exceptions import TooLarge
from ctspkit.utils.log import logger

MTZ = "mtz"
MCF = "mcf"
FORMULATIONS = [MTZ, MCF]

MTZ_LIMIT = 3000
MCF_LIMIT = 200

# Terms per line of a rendered row
_WRAP = 8

Term = Tuple[int, str]


@dataclass(frozen=True)
class Row:

    name: str
    terms: List[Term]
    sense: str
    rhs: int


@dataclass
class ModelSpec:

    """A linear model before it is rendered to text"""

    name: str
    objective: List[Term] = field(default_factory=list)
    rows: List[Row] = field(default_factory=list)
    binaries: List[str] = field(default_factory=list)
    continuous: List[str] = field(default_factory=list)
    # name -> (lower, upper); None is unbounded
    bounds: Dict[str, Tuple[Optional[int], Optional[int]]] = field(default_factory=dict)

    @property
    def variable_count(self) -> int:
        return len(self.binaries) + len(self.continuous)

    def rows_named(self, prefix: str) -> List[Row]:
        return [row for row in self.rows if row.name.startswith(prefix)]


def _x(i: int, j: int) -> str:
    return f"x_{i}_{j}"


def _core_model(inst: Instance, name: str) -> ModelSpec:
    n = inst.n
    spec = ModelSpec(name=name)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            spec.binaries.append(_x(i, j))
            if i == j:
                spec.bounds[_x(i, i)] = (0, 0)
            else:
                spec.objective.append((inst(i, j), _x(i, j)))
    for i in range(1, n + 1):
        terms = [(1, _x(i, j)) for j in range(1, n + 1) if j != i]
        spec.rows.append(Row(f"out_{i}", terms, "=", 1))
    for j in range(1, n + 1):
        terms = [(1, _x(i, j)) for i in range(1, n + 1) if i != j]
        spec.rows.append(Row(f"in_{j}", terms, "=", 1))
    if inst.m == 1:
        logger.warning("Cluster row for a single cluster admits no tour of %s vertices", n)
    for k, cluster in enumerate(inst.clusters, start=1):
        terms = [(1, _x(i, j)) for i in cluster for j in cluster if i != j]
        spec.rows.append(Row(f"cluster_{k}", terms, "=", len(cluster) - 1))
    return spec


def mtz_model(inst: Instance) -> ModelSpec:
    """n^2 binaries, n - 1 ordering variables and
    2n + (n - 1)(n - 2) + m rows"""
    n = inst.n
    if n > MTZ_LIMIT:
        raise TooLarge("MTZ model export", n, MTZ_LIMIT)
    spec = _core_model(inst, f"{inst.name}-mtz")
    for i in range(2, n + 1):
        spec.continuous.append(f"u_{i}")
        spec.bounds[f"u_{i}"] = (0, None)
    for i in range(2, n + 1):
        for j in range(2, n + 1):
            if i != j:
                terms = [(1, f"u_{i}"), (-1, f"u_{j}"), (n - 1, _x(i, j))]
                spec.rows.append(Row(f"mtz_{i}_{j}", terms, "<=", n - 2))
    return spec


def mcf_model(inst: Instance) -> ModelSpec:
    """n^2 binaries plus (n - 1) n^2 flow variables y_k_i_j, one unit
    commodity from vertex 1 to each vertex k = 2..n"""
    n = inst.n
    if n > MCF_LIMIT:
        raise TooLarge("MCF model export", n, MCF_LIMIT)
    spec = _core_model(inst, f"{inst.name}-mcf")
    vertices = range(1, n + 1)
    for k in range(2, n + 1):
        for i in vertices:
            for j in vertices:
                y = f"y_{k}_{i}_{j}"
                spec.continuous.append(y)
                spec.bounds[y] = (0, None)
                spec.rows.append(Row(f"link_{k}_{i}_{j}", [(1, y), (-1, _x(i, j))], "<=", 0))
        spec.rows.append(
            Row(f"source_out_{k}", [(1, f"y_{k}_1_{i}") for i in range(2, n + 1)], "=", 1)
        )
        spec.rows.append(
            Row(f"source_in_{k}", [(1, f"y_{k}_{i}_1") for i in range(2, n + 1)], "=", 0)
        )
        spec.rows.append(Row(f"sink_in_{k}", [(1, f"y_{k}_{i}_{k}") for i in vertices], "=", 1))
        spec.rows.append(Row(f"sink_out_{k}", [(1, f"y_{k}_{k}_{j}") for j in vertices], "=", 0))
        for j in range(2, n + 1):
            if j == k:
                continue
            terms = [(1, f"y_{k}_{i}_{j}") for i in vertices]
            terms += [(-1, f"y_{k}_{j}_{i}") for i in vertices]
            spec.rows.append(Row(f"flow_{k}_{j}", terms, "=", 0))
    return spec


def _expression(terms: List[Term]) -> List[str]:
    if not terms:
        return ["0 x_1_1"]
    parts = []
    for index, (coefficient, variable) in enumerate(terms):
        sign = "-" if coefficient < 0 else "+"
        magnitude = abs(coefficient)
        text = variable if magnitude == 1 else f"{magnitude} {variable}"
        if index == 0:
            parts.append(text if sign == "+" else f"- {text}")
        else:
            parts.append(f"{sign} {text}")
    lines = []
    for start in range(0, len(parts), _WRAP):
        lines.append(" ".join(parts[start : start + _WRAP]))
    return lines


def render_lp(spec: ModelSpec, relax: bool = False) -> str:
    """CPLEX LP text of a model; relax drops the Binaries section and
    bounds the binaries by [0, 1] instead"""
    lines = [f"\\ {spec.name}", "Minimize"]
    objective = _expression(spec.objective)
    lines.append(f" obj: {objective[0]}")
    lines.extend(f"  {line}" for line in objective[1:])
    lines.append("Subject To")
    for row in spec.rows:
        expression = _expression(row.terms)
        if len(expression) == 1:
            lines.append(f" {row.name}: {expression[0]} {row.sense} {row.rhs}")
            continue
        lines.append(f" {row.name}: {expression[0]}")
        lines.extend(f"  {line}" for line in expression[1:-1])
        lines.append(f"  {expression[-1]} {row.sense} {row.rhs}")
    lines.append("Bounds")
    for variable in spec.binaries:
        lower, upper = spec.bounds.get(variable, (0, 1))
        if relax or (lower, upper) != (0, 1):
            lines.append(f" {lower} <= {variable} <= {upper}")
    for variable in spec.continuous:
        lower, upper = spec.bounds.get(variable, (0, None))
        if upper is None:
            lines.append(f" {variable} >= {lower}")
        else:
            lines.append(f" {lower} <= {variable} <= {upper}")
    if spec.binaries and not relax:
        lines.append("Binaries")
        for start in range(0, len(spec.binaries), _WRAP):
            lines.append(" " + " ".join(spec.binaries[start : start + _WRAP]))
    lines.append("End")
    return "\n".join(lines) + "\n"


def export_mtz_model(inst: Instance) -> str:
    return render_lp(mtz_model(inst))


def export_mcf_model(inst: Instance) -> str:
    return render_lp(mcf_model(inst))


def export_model(inst: Instance, formulation: str, relax: bool = False) -> str:
    """Renders the named formulation, 'mtz' or 'mcf'"""
    builders = {MTZ: mtz_model, MCF: mcf_model}
    return render_lp(builders[formulation](inst), relax=relax)
