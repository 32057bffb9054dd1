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
import importlib
import sys
from typing import List, Optional

import pkg_resources

from ctspkit.utils.log import logger

# The packages whose versions are recorded with every results archive
SOLVER_DEPENDENCIES = ["numpy", "joblib", "click", "tqdm", "git"]

# Import names whose distribution is named differently
_DISTRIBUTIONS = {"git": "gitpython"}


def _get_version(modname: str) -> Optional[str]:
    # pylint: disable=broad-except
    try:
        if modname in sys.modules:
            mod = sys.modules[modname]
        else:
            logger.debug("Trying to import: %s", modname)
            mod = importlib.import_module(modname)
        return mod.__version__
    except AttributeError:
        try:
            distribution = _DISTRIBUTIONS.get(modname, modname)
            return pkg_resources.get_distribution(distribution).version
        except Exception:
            logger.debug("Unable to get %s's version", modname)
            return None
    except ImportError:
        logger.debug("%s is not installed.", modname)
        return None
    except Exception:
        logger.error("Error importing: %s.", modname)
        return None


def get_dependency_versions(modnames: List[str]) -> dict:
    """Maps each module name to its installed version, or None"""
    return {modname: _get_version(modname) for modname in modnames}