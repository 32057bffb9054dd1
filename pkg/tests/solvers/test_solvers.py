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
import pytest

from ctspkit.exact.brute_force import brute_force_tsp
from ctspkit.solvers.eax import Strategy
from ctspkit.solvers.solver import Solver
from ctspkit.solvers.solvers import (
    EaxSolver,
    ExactSolver,
    LocalSearchSolver,
    get_solver,
    solver_names,
)
from ctspkit.tours.tour import check_permutation
from ctspkit.transform.big_m import to_tsp
from ctspkit.utils.exceptions import InvalidConfig, TooLarge

# pylint: disable=unused-import
from tests.fixtures import random_instance

# pylint: disable=missing-function-docstring


def test_solver_names():
    assert solver_names() == ["eax", "exact", "ls"]


@pytest.mark.parametrize(
    "name,solver_type",
    [
        ("ls", LocalSearchSolver),
        ("eax", EaxSolver),
        ("exact", ExactSolver),
    ],
)
def test_get_solver(name, solver_type):
    solver = get_solver(name)
    assert isinstance(solver, solver_type)
    assert isinstance(solver, Solver)
    assert solver.NAME == name


def test_get_unknown_solver():
    with pytest.raises(InvalidConfig):
        get_solver("lkh")


@pytest.mark.parametrize(
    "name,params",
    [
        ("ls", {"restarts": 0}),
        ("ls", {"population": 3}),
        ("eax", {"p": 1}),
        ("eax", {"strategy": "block2"}),
        ("eax", {"generations": 4}),
    ],
)
def test_get_solver_bad_parameters(name, params):
    with pytest.raises(InvalidConfig):
        get_solver(name, **params)


def test_describe():
    solver = get_solver("eax", p=10, strategy="k-multiple:4")
    assert solver.describe() == {
        "algorithm": "eax",
        "parameters": {"p": 10, "strategy": "k-multiple:4"},
    }
    assert solver.config(seed=3).strategy == Strategy.k_multiple(4)
    assert get_solver("ls").describe() == {"algorithm": "ls", "parameters": {}}


@pytest.mark.parametrize(
    "name,params",
    [
        ("ls", {"restarts": 3}),
        ("eax", {"p": 10, "r": 4}),
        ("exact", {}),
    ],
)
def test_solvers_agree_with_exact_on_small_instance(name, params):
    inst = random_instance(5, 8, 1)
    _, optimum = brute_force_tsp(inst, 8)
    result = get_solver(name, **params).solve(inst, 8, seed=1)
    check_permutation(result.best_tour.order, 8)
    assert result.best_cost >= optimum
    assert result.best_cost == result.best_tour.cost
    if name == "exact":
        assert result.best_cost == optimum
        assert result.termination == "optimal"


def test_solvers_work_on_transformed_instance():
    inst = random_instance(6, 40, 4)
    tsp = to_tsp(inst)
    for name, params in [("ls", {}), ("eax", {"p": 8, "r": 4})]:
        result = get_solver(name, **params).solve(tsp, tsp.n, seed=0)
        check_permutation(result.best_tour.order, 40)


def test_exact_solver_refuses_large_instance():
    inst = random_instance(7, 13, 1)
    with pytest.raises(TooLarge):
        get_solver("exact").solve(inst, 13, seed=0)
