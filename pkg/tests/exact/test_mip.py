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

import pytest

from ctspkit.exact.brute_force import brute_force_ctsp
from ctspkit.exact.lp_models import MCF, MTZ, export_mcf_model, export_model, export_mtz_model
from ctspkit.exact.mip import (
    _command,
    check_status,
    parse_objective,
    parse_status,
    solve_lp,
)
from ctspkit.utils.environment import MIP_SOLVER_ENV_KEY
from ctspkit.utils.exceptions import ExternalSolverError

# pylint: disable=unused-import
from tests.fixtures import random_instance

# pylint: disable=missing-function-docstring
# pylint: disable=protected-access

requires_solver = pytest.mark.skipif(
    MIP_SOLVER_ENV_KEY not in os.environ, reason=f"{MIP_SOLVER_ENV_KEY} is not set"
)


@pytest.mark.parametrize(
    "output,expected",
    [
        ("Objective value:                123.00000000\n", 123.0),
        ("Objective value     :  1.2340000000e+03\n", 1234.0),
        ("Objective value 17\nObjective value 12\n", 12.0),
    ],
)
def test_parse_objective(output, expected):
    assert parse_objective(output) == expected


def test_parse_objective_missing():
    with pytest.raises(ExternalSolverError):
        parse_objective("Problem status: infeasible\n")


HIGHS_OPTIMAL = """Presolving model
12 rows, 30 cols, 96 nonzeros
Sum of primal infeasibilities 3.5
Model status        : Optimal
Objective value     :  2.4000000000e+01
"""

CBC_OPTIMAL = """Cbc0010I After 100 nodes, 7 on tree, best possible 20 (0.02 seconds)
Cbc0006I The LP relaxation is infeasible or too expensive
Result - Optimal solution found

Objective value:                24.00000000
"""

CBC_INFEASIBLE = """Problem is infeasible - 0.01 seconds
Result - Problem proven infeasible

No feasible solution found
"""

CLP_OPTIMAL = """Dual infeasibilities 2
Optimal - objective value 22.5
"""


@pytest.mark.parametrize(
    "output,status",
    [
        (HIGHS_OPTIMAL, "Optimal"),
        (CBC_OPTIMAL, "Optimal solution found"),
        (CBC_INFEASIBLE, "Problem proven infeasible"),
        (CLP_OPTIMAL, "Optimal"),
        ("no status here\n", None),
    ],
)
def test_parse_status(output, status):
    assert parse_status(output) == status


@pytest.mark.parametrize("output", [HIGHS_OPTIMAL, CBC_OPTIMAL, CLP_OPTIMAL])
def test_infeasibility_counts_are_not_a_status(output):
    check_status(output)
    assert parse_objective(output) in (24.0, 22.5)


@pytest.mark.parametrize(
    "output",
    [
        CBC_INFEASIBLE,
        "Model status        : Infeasible\n",
        "Model status        : Time limit reached\n",
    ],
)
def test_status_without_optimum(output):
    with pytest.raises(ExternalSolverError):
        check_status(output)

@pytest.mark.parametrize(
    "solver,expected",
    [
        ("highs", ["highs", "--model_file", "m.lp"]),
        ("/opt/bin/HiGHS", ["/opt/bin/HiGHS", "--model_file", "m.lp"]),
        ("cbc", ["cbc", "m.lp", "solve"]),
    ],
)
def test_command(solver, expected):
    assert _command(solver, "m.lp") == expected


def test_command_unsupported():
    with pytest.raises(ExternalSolverError):
        _command("glpsol", "m.lp")


def test_no_solver_configured(monkeypatch):
    monkeypatch.delenv(MIP_SOLVER_ENV_KEY, raising=False)
    with pytest.raises(ExternalSolverError):
        solve_lp("End\n")


def test_solver_not_found():
    with pytest.raises(ExternalSolverError):
        solve_lp("End\n", solver="/does/not/exist/highs")


@pytest.mark.mip
@requires_solver
@pytest.mark.parametrize("export", [export_mtz_model, export_mcf_model])
@pytest.mark.parametrize("seed", range(10))
def test_mip_matches_brute_force(export, seed):
    inst = random_instance(seed, 5 + seed % 4, 2 + seed % 3)
    _, cost = brute_force_ctsp(inst)
    assert round(solve_lp(export(inst))) == cost


@pytest.mark.mip
@requires_solver
@pytest.mark.parametrize("seed", range(20))
def test_flow_relaxation_is_at_least_as_strong(seed):
    inst = random_instance(500 + seed, 5 + seed % 6, 2 + seed % 3)
    mtz = solve_lp(export_model(inst, MTZ, relax=True))
    mcf = solve_lp(export_model(inst, MCF, relax=True))
    assert mcf >= mtz - 1e-6
