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
import re
import shutil
import subprocess
import tempfile
from typing import List, Optional

from ctspkit.utils.environment import mip_solver
from ctspkit.utils.exceptions import ExternalSolverError
from ctspkit.utils.log import logger

_OBJECTIVE = re.compile(
    r"Objective value\s*:?\s*([-+]?\d+(?:\.\d*)?(?:[eE][-+]?\d+)?)", re.IGNORECASE
)
# highs, cbc, and clp on pure LPs
_STATUS = [
    re.compile(r"^\s*Model\s+status\s*:\s*(.+?)\s*$", re.MULTILINE),
    re.compile(r"^\s*Result - (.+?)\s*$", re.MULTILINE),
    re.compile(r"^\s*(\w[\w ]*?) - objective value", re.MULTILINE),
]


def _command(solver: str, model_path: str) -> List[str]:
    name = os.path.basename(solver).lower()
    if name.startswith("highs"):
        return [solver, "--model_file", model_path]
    if name.startswith("cbc"):
        return [solver, model_path, "solve"]
    raise ExternalSolverError(f"unsupported MIP solver '{solver}', expected highs or cbc")


def parse_objective(output: str) -> float:
    """The last objective value reported in solver output"""
    values = _OBJECTIVE.findall(output)
    if not values:
        raise ExternalSolverError("solver output has no objective value")
    return float(values[-1])


def parse_status(output: str) -> Optional[str]:
    """The final status line of a solver run, None if it printed none"""
    for pattern in _STATUS:
        found = pattern.findall(output)
        if found:
            return found[-1]
    return None


def check_status(output: str):
    status = parse_status(output)
    if status is None:
        return
    if "infeasible" in status.lower():
        raise ExternalSolverError(f"solver reports the model infeasible: {status}")
    if "optimal" not in status.lower():
        raise ExternalSolverError(f"solver stopped without an optimum: {status}")


def solve_lp(lp_text: str, solver: Optional[str] = None, timeout: int = 600) -> float:
    """Runs an external MIP solver (highs or cbc) on an LP model and
    returns its optimal objective value"""
    solver = mip_solver(solver)
    if solver is None:
        raise ExternalSolverError("no MIP solver configured")
    if shutil.which(solver) is None and not os.path.exists(solver):
        raise ExternalSolverError(f"MIP solver '{solver}' not found")
    with tempfile.TemporaryDirectory() as tmp_dir:
        model_path = os.path.join(tmp_dir, "model.lp")
        with open(model_path, "w", encoding="ascii") as out:
            out.write(lp_text)
        command = _command(solver, model_path)
        logger.debug("Running: %s", " ".join(command))
        try:
            completed = subprocess.run(
                command,
                capture_output=True,
                text=True,
                timeout=timeout,
                check=False,
            )
        except subprocess.TimeoutExpired as exc:
            raise ExternalSolverError(f"solver timed out after {timeout}s") from exc
    if completed.returncode != 0:
        raise ExternalSolverError(
            f"solver exited with {completed.returncode}: {completed.stderr.strip()}"
        )
    check_status(completed.stdout)
    return parse_objective(completed.stdout)
