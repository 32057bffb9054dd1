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
"""
A benchmark manifest lists one instance file per line, optionally
followed by its reference cost. Blank lines and everything after a
'#' are ignored; relative paths are resolved against the directory
of the manifest.

    # path                     reference
    instances/25-eil101.gtsp   23671
    instances/gen-60-4-s1.gtsp
"""
import os
from dataclasses import dataclass
from typing import List, Optional

from ctspkit.utils.exceptions import ManifestError


@dataclass(frozen=True)
class ManifestEntry:

    path: str
    reference: Optional[int] = None


def parse_manifest(text: str, base_dir: str = ".") -> List[ManifestEntry]:
    entries = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if len(tokens) > 2:
            raise ManifestError(line_number, line)
        reference = None
        if len(tokens) == 2:
            try:
                reference = int(tokens[1])
            except ValueError as exc:
                raise ManifestError(line_number, line) from exc
        path = tokens[0]
        if not os.path.isabs(path):
            path = os.path.normpath(os.path.join(base_dir, path))
        entries.append(ManifestEntry(path=path, reference=reference))
    return entries


def read_manifest(path: str) -> List[ManifestEntry]:
    with open(path, "r", encoding="utf-8") as lines:
        return parse_manifest(lines.read(), os.path.dirname(os.path.abspath(path)))
