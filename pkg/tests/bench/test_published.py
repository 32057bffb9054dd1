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

from ctspkit.bench.trials import AlgoSpec, run_trials
from ctspkit.instances.references import reference_cost
from ctspkit.instances.tsplib import read_instance
from ctspkit.utils.environment import BENCHMARK_DIR_ENV_KEY

# pylint: disable=missing-function-docstring

pytestmark = [pytest.mark.benchmark, pytest.mark.slow]

GA_EAX = AlgoSpec("eax", {"p": 300, "r": 30, "strategy": "single"})


def _load(name: str):
    benchmark_dir = os.environ.get(BENCHMARK_DIR_ENV_KEY)
    if benchmark_dir is None:
        pytest.skip(f"{BENCHMARK_DIR_ENV_KEY} is not set")
    path = os.path.join(benchmark_dir, f"{name}.gtsp")
    if not os.path.exists(path):
        pytest.skip(f"{path} not found")
    return read_instance(path)


def test_medium_optima():
    names = ["25-eil101", "i-50-gil262", "300-6", "10-lin318"]
    instances = [_load(name) for name in names]
    solved = 0
    for inst in instances:
        stats = run_trials(inst, GA_EAX, 10)
        assert stats.reference == reference_cost(inst.name).cost
        solved += stats.best == stats.reference
        assert max(run.wall_time for run in stats.runs) <= 120
    assert solved >= 3


def test_large_optimum():
    inst = _load("144-pcb1173")
    stats = run_trials(inst, GA_EAX, 10)
    assert stats.reference == 62142
    assert stats.gap_best * 100 <= 5
