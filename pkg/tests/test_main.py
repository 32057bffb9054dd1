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
import json
import os

import pytest
from click.testing import CliRunner

from ctspkit.__main__ import cli
from ctspkit.bench.trials import AlgoSpec, solve_ctsp
from ctspkit.instances.instance import Instance
from ctspkit.instances.tsplib import read_instance, save_instance
from ctspkit.tours.tour import Tour
from ctspkit.tours.tour_file import read_tour, save_tour

# pylint: disable=missing-function-docstring
# pylint: disable=redefined-outer-name


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def square_file(tmp_path):
    inst = Instance.from_coordinates(
        "square", [(0, 0), (1, 0), (1, 1), (0, 1)], [[1, 2], [3, 4]]
    )
    return save_instance(inst, str(tmp_path / "square.gtsp"))


@pytest.fixture
def generated_file(runner, tmp_path):
    path = str(tmp_path / "gen.gtsp")
    result = runner.invoke(cli, ["gen", "--n", "12", "--m", "3", "--seed", "1", "--output", path])
    assert result.exit_code == 0
    return path


def _json_line(output: str) -> dict:
    line = next(line for line in output.splitlines() if line.startswith("{"))
    return json.loads(line)


def test_gen(generated_file):
    inst = read_instance(generated_file)
    assert inst.name == "gen-12-3-s1"
    assert inst.n == 12
    assert inst.m == 3


def test_gen_invalid(runner, tmp_path):
    result = runner.invoke(cli, ["gen", "--n", "2", "--m", "3", "--output", str(tmp_path / "x")])
    assert result.exit_code == 1


def test_transform(runner, generated_file, tmp_path):
    path = str(tmp_path / "gen.tsp")
    result = runner.invoke(cli, ["transform", generated_file, "--output", path])
    assert result.exit_code == 0
    with open(path, "r", encoding="ascii") as lines:
        text = lines.read()
    assert "TYPE : TSP" in text
    assert "m=3" in text


def test_transform_overflow(runner, tmp_path):
    big = 2**61
    inst = Instance.from_matrix("huge", [[0, big, 1], [big, 0, 1], [1, 1, 0]], [[1], [2, 3]])
    path = save_instance(inst, str(tmp_path / "huge.gtsp"))
    result = runner.invoke(cli, ["transform", path, "--output", str(tmp_path / "huge.tsp")])
    assert result.exit_code == 3


@pytest.mark.parametrize(
    "order,exit_code,contiguous",
    [
        ((1, 2, 3, 4), 0, True),
        ((1, 3, 2, 4), 2, False),
    ],
)
def test_validate(runner, square_file, tmp_path, order, exit_code, contiguous):
    tour_path = save_tour(Tour(order=order, cost=4), str(tmp_path / "t.tour"))
    result = runner.invoke(cli, ["validate", square_file, tour_path])
    assert result.exit_code == exit_code
    report = _json_line(result.output)
    assert report["contiguous"] is contiguous
    assert report["cost"] == 4


def test_validate_wrong_cost(runner, square_file, tmp_path):
    tour_path = save_tour(Tour(order=(1, 2, 3, 4), cost=5), str(tmp_path / "t.tour"))
    result = runner.invoke(cli, ["validate", square_file, tour_path])
    assert result.exit_code == 2
    assert _json_line(result.output)["cost_ok"] is False


def test_validate_malformed_tour(runner, square_file, tmp_path):
    tour_path = tmp_path / "t.tour"
    tour_path.write_text("1 2 3 4\n")
    result = runner.invoke(cli, ["validate", square_file, str(tour_path)])
    assert result.exit_code == 2


def test_recover(runner, generated_file, tmp_path):
    transformed = str(tmp_path / "gen.tsp")
    assert runner.invoke(cli, ["transform", generated_file, "--output", transformed]).exit_code == 0
    solution = solve_ctsp(read_instance(generated_file), AlgoSpec("ls"), seed=0)
    tour_path = save_tour(
        Tour(order=solution.tour.order, cost=solution.tsp_cost), str(tmp_path / "tsp.tour")
    )
    result = runner.invoke(cli, ["recover", transformed, tour_path])
    assert result.exit_code == 0
    assert result.output.strip().splitlines()[-1] == str(solution.cost)

    checked = runner.invoke(cli, ["recover", transformed, tour_path, "--instance", generated_file])
    assert checked.exit_code == 0


def test_recover_negative(runner, generated_file, tmp_path):
    transformed = str(tmp_path / "gen.tsp")
    runner.invoke(cli, ["transform", generated_file, "--output", transformed])
    tour_path = save_tour(Tour(order=tuple(range(1, 13)), cost=5), str(tmp_path / "tsp.tour"))
    result = runner.invoke(cli, ["recover", transformed, tour_path])
    assert result.exit_code == 2


def test_solve(runner, generated_file, tmp_path):
    out_dir = str(tmp_path / "tours")
    result = runner.invoke(
        cli, ["solve", generated_file, "--algo", "ls", "--runs", "2", "--output-dir", out_dir]
    )
    assert result.exit_code == 0
    assert sorted(os.listdir(out_dir)) == ["gen-12-3-s1.ls.s0.tour", "gen-12-3-s1.ls.s1.tour"]
    tour = read_tour(os.path.join(out_dir, "gen-12-3-s1.ls.s0.tour"))
    assert sorted(tour.order) == list(range(1, 13))


def test_solve_eax_with_log(runner, generated_file, tmp_path):
    log_path = str(tmp_path / "run.jsonl")
    result = runner.invoke(
        cli,
        ["solve", generated_file, "--algo", "eax", "--pop", "6", "--offspring", "3",
         "--log", log_path],
    )
    assert result.exit_code == 0
    with open(log_path, "r", encoding="utf-8") as lines:
        records = [json.loads(line) for line in lines]
    for generation, record in enumerate(records, start=1):
        assert record["generation"] == generation
        assert record["instance"] == "gen-12-3-s1"
        assert set(record) >= {"best", "average", "elapsed", "seed"}


def test_solve_bad_strategy(runner, generated_file):
    result = runner.invoke(cli, ["solve", generated_file, "--strategy", "block2"])
    assert result.exit_code == 1


def test_exact(runner, generated_file, tmp_path):
    tour_path = str(tmp_path / "opt.tour")
    result = runner.invoke(cli, ["exact", generated_file, "--output", tour_path])
    assert result.exit_code == 0
    assert "brute-force cost=" in result.output
    assert sorted(read_tour(tour_path).order) == list(range(1, 13))


def test_exact_too_large(runner, tmp_path):
    path = str(tmp_path / "big.gtsp")
    assert runner.invoke(cli, ["gen", "--n", "13", "--m", "1", "--output", path]).exit_code == 0
    result = runner.invoke(cli, ["exact", path])
    assert result.exit_code == 3


@pytest.mark.parametrize("formulation", ["mtz", "mcf"])
def test_export_model(runner, square_file, tmp_path, formulation):
    path = str(tmp_path / "model.lp")
    result = runner.invoke(
        cli, ["export-model", square_file, "--formulation", formulation, "--output", path]
    )
    assert result.exit_code == 0
    with open(path, "r", encoding="ascii") as lines:
        text = lines.read()
    assert text.startswith(f"\\ square-{formulation}")
    assert text.endswith("End\n")


def test_bench_and_profile(runner, tmp_path):
    paths = []
    for seed in (1, 2):
        path = str(tmp_path / f"gen{seed}.gtsp")
        args = ["gen", "--n", "15", "--m", "3", "--seed", str(seed), "--output", path]
        assert runner.invoke(cli, args).exit_code == 0
        paths.append(path)
    manifest = tmp_path / "bench.txt"
    manifest.write_text(f"{paths[0]}\n{paths[1]} 100000\n")

    archives = []
    for algo in ("ls", "eax"):
        archive = str(tmp_path / f"{algo}.json")
        table = str(tmp_path / f"{algo}.txt")
        csv_path = str(tmp_path / f"{algo}.csv")
        result = runner.invoke(
            cli,
            ["bench", str(manifest), "--algo", algo, "--runs", "2", "--pop", "6",
             "--offspring", "3", "--table", table, "--csv", csv_path, "--archive", archive],
        )
        assert result.exit_code == 0
        with open(csv_path, "r", encoding="utf-8") as lines:
            assert len(lines.read().splitlines()) == 3
        archives.append(archive)

    result = runner.invoke(cli, ["profile", *archives, "--metric", "time"])
    assert result.exit_code == 0
    assert "algorithm,tau,rho" in result.output

    normalized = runner.invoke(cli, ["profile", *archives, "--normalized"])
    assert normalized.exit_code == 0
    assert "algorithm,gap_avg" in normalized.output


@pytest.mark.parametrize(
    "args",
    [
        ["transform", "/does/not/exist.gtsp"],
        ["no-such-command"],
        ["solve"],
        ["profile", "--metric", "memory", "x.json"],
    ],
)
def test_usage_errors(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 1
