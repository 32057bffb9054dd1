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
from typing import Optional

MIP_SOLVER_ENV_KEY = "CTSPKIT_MIP_SOLVER"
MATRIX_LIMIT_ENV_KEY = "CTSPKIT_MATRIX_LIMIT"
BENCHMARK_DIR_ENV_KEY = "CTSPKIT_BENCHMARK_DIR"

_DEFAULT_MATRIX_LIMIT = 2000


def get_value(arg: str, env_key: str, allow_missing: bool = False) -> Optional[str]:
    """Settings can optionally be given through environment variables.
    This function is used to decide whether to
    - pull a variable from the user's environment;
    - return the one that was passed in;
    - return None
    """
    if arg is not None:
        # arg has been passed in as non-None, so return it
        return arg
    if env_key not in os.environ and allow_missing:
        return None
    # Return the environment variable; this will KeyError if it
    # is missing
    return os.environ[env_key]


def matrix_limit(limit: Optional[int] = None) -> int:
    """Largest vertex count for which a full distance matrix
    is held in memory"""
    value = get_value(limit, MATRIX_LIMIT_ENV_KEY, allow_missing=True)
    if value is None:
        return _DEFAULT_MATRIX_LIMIT
    return int(value)


def mip_solver(solver: Optional[str] = None) -> Optional[str]:
    """Returns the external MIP solver executable, if one is configured"""
    return get_value(solver, MIP_SOLVER_ENV_KEY, allow_missing=True)
