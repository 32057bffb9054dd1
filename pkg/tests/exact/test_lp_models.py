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
import re

import pytest

from ctspkit.exact import lp_models
from ctspkit.exact.lp_models import (
    MCF,
    MTZ,
    export_mcf_model,
    export_model,
    export_mtz_model,
    mcf_model,
    mtz_model,
    render_lp,
)
from ctspkit.utils.exceptions import TooLarge

# pylint: disable=unused-import
from tests.fixtures import random_instance, triangle, unit_square

# pylint: disable=missing-function-docstring
# pylint: disable=redefined-outer-name


def test_mtz_counts(unit_square):
    spec = mtz_model(unit_square)
    n, m = 4, 2
    assert len(spec.binaries) == n * n
    assert len(spec.continuous) == n - 1
    assert spec.variable_count == n * n + n - 1
    assert len(spec.rows_named("mtz_")) == (n - 1) * (n - 2)
    assert len(spec.rows_named("cluster_")) == m
    assert len(spec.rows) == 2 * n + (n - 1) * (n - 2) + m
    assert len(spec.objective) == n * (n - 1)


def test_mtz_rows(unit_square):
    spec = mtz_model(unit_square)
    row = next(r for r in spec.rows if r.name == "mtz_2_3")
    assert row.terms == [(1, "u_2"), (-1, "u_3"), (3, "x_2_3")]
    assert row.sense == "<="
    assert row.rhs == 2
    cluster = spec.rows_named("cluster_1")[0]
    assert sorted(v for _, v in cluster.terms) == ["x_1_2", "x_2_1"]
    assert cluster.rhs == 1


def test_mcf_counts(unit_square):
    spec = mcf_model(unit_square)
    n, m = 4, 2
    assert len(spec.continuous) == (n - 1) * n * n
    assert len(spec.rows_named("link_")) == (n - 1) * n * n
    assert len(spec.rows_named("flow_")) == (n - 1) * (n - 2)
    assert len(spec.rows_named("source_")) == 2 * (n - 1)
    assert len(spec.rows_named("sink_")) == 2 * (n - 1)
    assert len(spec.rows_named("cluster_")) == m


def test_self_arcs_are_fixed_to_zero(unit_square):
    spec = mtz_model(unit_square)
    for i in range(1, 5):
        assert spec.bounds[f"x_{i}_{i}"] == (0, 0)
    assert all(variable not in {"x_1_1", "x_2_2"} for _, variable in spec.objective)


def test_objective_uses_distances(triangle):
    spec = mtz_model(triangle)
    costs = {variable: coefficient for coefficient, variable in spec.objective}
    assert costs["x_1_2"] == 3
    assert costs["x_3_1"] == 4
    assert costs["x_2_3"] == 5


def test_single_cluster_row(triangle):
    spec = mtz_model(triangle)
    (row,) = spec.rows_named("cluster_")
    assert row.rhs == 2
    assert len(row.terms) == 6


def test_render(unit_square):
    text = export_mtz_model(unit_square)
    assert text.startswith("\\ square-mtz\nMinimize\n obj:")
    assert text.endswith("End\n")
    assert "Subject To" in text
    assert " 0 <= x_1_1 <= 0" in text
    assert " u_2 >= 0" in text
    assert "Binaries" in text
    assert " 0 <= x_1_2 <= 1" not in text
    assert " mtz_2_3: u_2 - u_3 + 3 x_2_3 <= 2" in text
    assert export_model(unit_square, MTZ) == text


def test_render_relaxed(unit_square):
    text = render_lp(mtz_model(unit_square), relax=True)
    assert "Binaries" not in text
    assert " 0 <= x_1_2 <= 1" in text
    assert " 0 <= x_1_1 <= 0" in text


def test_render_wraps_long_rows():
    inst = random_instance(1, 12, 1)
    lines = export_mcf_model(inst).splitlines()
    start = lines.index(" out_1: x_1_2 + x_1_3 + x_1_4 + x_1_5 + x_1_6 + x_1_7 + x_1_8 + x_1_9")
    assert lines[start + 1] == "  + x_1_10 + x_1_11 + x_1_12 = 1"
    assert export_model(inst, MCF) == "\n".join(lines) + "\n"


@pytest.mark.parametrize("seed", range(20))
def test_random_model_sizes(seed):
    n, m = 5 + seed % 6, 1 + seed % 4
    inst = random_instance(seed, n, m)
    spec = mtz_model(inst)
    assert len(spec.rows) == 2 * n + (n - 1) * (n - 2) + m
    text = render_lp(spec)
    for row in spec.rows:
        assert text.count(f" {row.name}:") == 1
    cluster_terms = sum(len(r.terms) for r in spec.rows_named("cluster_"))
    assert cluster_terms == sum(len(c) * (len(c) - 1) for c in inst.clusters)


def test_size_limits(unit_square, monkeypatch):
    monkeypatch.setattr(lp_models, "MTZ_LIMIT", 3)
    monkeypatch.setattr(lp_models, "MCF_LIMIT", 3)
    with pytest.raises(TooLarge):
        mtz_model(unit_square)
    with pytest.raises(TooLarge):
        mcf_model(unit_square)


SENSES = {"<=", ">=", "="}
SECTIONS = ["Minimize", "Subject To", "Bounds", "Binaries", "General", "End"]
IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _terms(tokens):
    terms, sign, coefficient = [], 1, 1
    for token in tokens:
        if token in ("+", "-"):
            sign = -1 if token == "-" else 1
        elif IDENTIFIER.match(token):
            terms.append((sign * coefficient, token))
            sign, coefficient = 1, 1
        else:
            coefficient = int(token)
    return terms


def _parse_lp(text):
    """Reads the LP sections back into objective terms, named rows,
    bounded variables, and binaries"""
    lines = [line for line in text.splitlines() if not line.startswith("\\")]
    sections = [line for line in lines if line in SECTIONS]
    assert sections[0] == "Minimize"
    assert sections[-1] == "End"
    assert lines[-1] == "End"
    assert sections == sorted(sections, key=SECTIONS.index)

    parsed = {"objective": [], "rows": {}, "bounds": set(), "binaries": set()}
    section, name, tokens = None, None, []
    for line in lines:
        if line in SECTIONS:
            assert not tokens, f"row {name} is not terminated"
            section = line
            continue
        assert line.startswith(" ")
        if section == "Minimize":
            body = line.split(":", 1)[1] if line.startswith(" obj:") else line
            parsed["objective"] += _terms(body.split())
        elif section == "Subject To":
            if not line.startswith("  "):
                name, body = line.strip().split(":", 1)
                assert IDENTIFIER.match(name)
                assert name not in parsed["rows"], f"duplicate row {name}"
            else:
                body = line
            tokens += body.split()
            senses = [t for t in tokens if t in SENSES]
            if senses:
                (sense,) = senses
                assert tokens[-2] == sense
                parsed["rows"][name] = (_terms(tokens[:-2]), sense, int(tokens[-1]))
                tokens = []
        elif section == "Bounds":
            declared = [t for t in line.split() if IDENTIFIER.match(t)]
            assert len(declared) == 1
            parsed["bounds"].update(declared)
        elif section in ("Binaries", "General"):
            parsed["binaries"].update(line.split())
    return parsed


@pytest.mark.parametrize("formulation", [MTZ, MCF])
@pytest.mark.parametrize("relax", [False, True])
@pytest.mark.parametrize("seed", range(5))
def test_rendered_model_reads_back(formulation, relax, seed):
    inst = random_instance(seed, 4 + seed, 1 + seed % 3)
    spec = {MTZ: mtz_model, MCF: mcf_model}[formulation](inst)
    parsed = _parse_lp(render_lp(spec, relax=relax))

    assert parsed["objective"] == spec.objective
    assert list(parsed["rows"]) == [row.name for row in spec.rows]
    for row in spec.rows:
        terms, sense, rhs = parsed["rows"][row.name]
        assert sense in SENSES
        assert terms == row.terms
        assert (sense, rhs) == (row.sense, row.rhs)

    declared = parsed["bounds"] | parsed["binaries"]
    used = {v for _, v in parsed["objective"]}
    for terms, _, _ in parsed["rows"].values():
        used.update(v for _, v in terms)
    assert used <= declared
    assert set(spec.continuous) <= parsed["bounds"]
    if relax:
        assert not parsed["binaries"]
        assert set(spec.binaries) <= parsed["bounds"]
    else:
        assert parsed["binaries"] == set(spec.binaries)
