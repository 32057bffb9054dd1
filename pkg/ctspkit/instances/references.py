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
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Reference:

    """A published reference cost for a benchmark instance"""

    cost: int
    # False when the value is only the best known upper bound
    optimal: bool = True


def _bounds(**costs) -> dict:
    return {k: Reference(v, optimal=False) for k, v in costs.items()}


# Medium instances (n < 1000 for most rows)
_MEDIUM = {
    "i-50-gil262": 135431,
    "10-lin318": 529584,
    "10-pcb442": 537419,
    "C1k.0": 132521027,
    "C1k.1": 129128125,
    "C1k.2": 142784000,
    "300-6": 8934,
    "400-6": 9045,
    "700-20": 41425,
    "200-4-h": 62777,
    "200-4-x1": 60574,
    "600-8-z": 128891,
    "600-8-x2": 128891,
    "300-5-108": 67760,
    "300-20-111": 309739,
    "500-15-306": 194818,
    "500-25-308": 365447,
    "25-eil101": 23671,
    "42-a280": 129645,
    "144-rat783": 914228,
}

_LARGE = {
    "49-pcb1173": 61600,
    "100-pcb1173": 63382,
    "144-pcb1173": 62142,
    "10-nrw1379": 58783,
    "12-nrw1379": 59129,
    "1500-10-503": 11116,
    "1500-20-504": 15698,
    "1500-50-505": 22900,
    "1500-100-506": 29799,
    "1500-150-507": 34068,
    "2000-10-a": 105360,
    "2000-10-h": 33708,
    "2000-10-z": 33509,
    "2000-10-x1": 33792,
    "2000-10-x2": 33509,
}

_VERY_LARGE = {
    "10C1k.0": 12139627,
    "200C1k.0": 11929315,
    "200E1k.0": 24468822,
    "49usa1097": 77583052,
    "235pcb1173": 59796,
    "259d1291": 55962,
    "261rl1304": 261132,
    "265rl1323": 280004,
    "276nrw1379": 60473,
    "280fl1400": 20229,
    "287u1432": 162151,
    "316fl1577": 23023,
    "331d1655": 65871,
    "350vm1748": 348244,
    "364u1817": 61879,
    "378rl1889": 323040,
    "479pr2392": 397707,
    "608pcb3038": 146351,
    "31C3k.0": 20058457,
    "633C3k.0": 20158425,
    "633E3k.0": 42697510,
}

_BEST_KNOWN = _bounds(
    **{
        "421d2103": 91637,
        "431u2152": 69876,
        "464u2319": 246707,
        "759fl3795": 29582,
        "893fnl4461": 193834,
        "1183rl5915": 599096,
        "1187rl5934": 588074,
        "1480pla7397": 23926551,
        "100C10k.0": 36352580,
        "2000C10k.0": 34574383,
        "2000E10k.0": 75506665,
        "2370rl11849": 977472,
        "2702usa13509": 20836160,
        "2811brd14051": 496827,
        "3023d15112": 1658091,
        "3703d18512": 683839,
        "4996sw24978": 893042,
    }
)

REFERENCES = {
    **{k: Reference(v) for k, v in {**_MEDIUM, **_LARGE, **_VERY_LARGE}.items()},
    **_BEST_KNOWN,
}

# Name patterns of the benchmark families, checked in order
_FAMILIES = [
    ("tsplib-kmeans", re.compile(r"^i-\d+-[a-z]+\d+$")),
    ("tsplib-kmeans", re.compile(r"^\d+-[a-z]+\d+$")),
    ("concorde", re.compile(r"^\d*[CE]\d+k\.\d+$")),
    ("geometric-centres", re.compile(r"^\d+[a-z]+\d+$")),
    ("laporte-layout", re.compile(r"^\d+-\d+-[a-z]+\d*$")),
    ("grid", re.compile(r"^\d+-\d+-\d+$")),
    ("generated", re.compile(r"^gen-\d+-\d+-s\d+$")),
    ("uniform-clusters", re.compile(r"^\d+-\d+$")),
]


def instance_key(name_or_path: str) -> str:
    """The bare instance name of a file path such as 'dir/25-eil101.gtsp'"""
    base = os.path.basename(name_or_path)
    for suffix in (".gtsp", ".tsp", ".txt"):
        if base.endswith(suffix):
            return base[: -len(suffix)]
    return base


def reference_cost(name: str) -> Optional[Reference]:
    """Returns the published reference for an instance name, if any"""
    return REFERENCES.get(instance_key(name))


def instance_family(name: str) -> str:
    """Classifies an instance name into its benchmark family"""
    key = instance_key(name)
    for family, pattern in _FAMILIES:
        if pattern.match(key):
            return family
    return "unknown"
