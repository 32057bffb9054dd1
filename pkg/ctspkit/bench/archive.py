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
from typing import List, Optional, Tuple

from ctspkit.bench.stats import RunStats
from ctspkit.meta import metadata
from ctspkit.utils.log import logger

ARCHIVE_VERSION = 1


def save_results(path: str, stats: List[RunStats], run_meta: Optional[dict] = None) -> str:
    """Writes the raw runs of a benchmark session as JSON, together
    with where, when and with what code they were produced"""
    archive = {
        "version": ARCHIVE_VERSION,
        "meta": {
            "code": metadata.generate_for_code(),
            "run": run_meta or {},
        },
        "results": [entry.to_dict() for entry in stats],
    }
    parent_dir = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent_dir, exist_ok=True)
    with open(path, "w", encoding="utf-8") as out:
        out.write(json.dumps(archive, indent=2))
    logger.info("Results archive written to %s", path)
    return path


def load_results(path: str) -> Tuple[List[RunStats], dict]:
    """Reads an archive written by save_results()"""
    with open(path, "r", encoding="utf-8") as lines:
        archive = json.loads(lines.read())
    stats = [RunStats.from_dict(entry) for entry in archive.get("results", [])]
    return stats, archive.get("meta", {})
