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
from datetime import datetime
from typing import Optional

import ctspkit
from ctspkit.meta import dependencies, revision, runtime


def generate_for_code(deps_list: Optional[list] = None) -> dict:
    """Describes the code and machine that produced a set of results"""
    if deps_list is None:
        deps_list = dependencies.SOLVER_DEPENDENCIES
    versioned_deps = dependencies.get_dependency_versions(deps_list)
    metadata = {
        "runtime": f"python:{runtime.get_python_version()}",
        "machine": runtime.get_machine(),
        "user": runtime.get_user(),
        "created": datetime.now().strftime("%Y/%m/%d/%H:%M:%S"),
        "dependencies": _remove_nones(versioned_deps),
        "ctspkit": ctspkit.__version__,
    }
    git_meta = revision.git_meta()
    if git_meta is not None:
        metadata["git"] = git_meta
    return metadata


def generate_for_run(
    algorithm: str,
    parameters: dict,
    n_runs: int,
    base_seed: int,
) -> dict:
    """Describes how a batch of trials was configured"""
    return {
        "algorithm": algorithm,
        "parameters": _remove_nones(parameters),
        "runs": n_runs,
        "base_seed": base_seed,
    }


def _remove_nones(values: dict) -> dict:
    return {k: v for k, v in values.items() if v is not None}
