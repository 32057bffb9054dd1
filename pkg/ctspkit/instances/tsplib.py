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
"""Reader and writer for GTSPLIB files: TSPLIB headers and data sections
plus GTSP_SETS / GTSP_SET_SECTION declaring the clusters.

    NAME : 25-eil101
    TYPE : GTSP
    DIMENSION : 101
    GTSP_SETS : 25
    EDGE_WEIGHT_TYPE : EUC_2D
    NODE_COORD_SECTION
    1 37 52
    ...
    GTSP_SET_SECTION
    1 3 17 44 -1
    ...
    EOF
"""
import os
from typing import Dict, List, Tuple

import numpy as np

from ctspkit.instances.instance import DistanceKind, Instance
from ctspkit.utils.exceptions import (
    DimensionMismatch,
    MalformedInstance,
    MissingSection,
    PartitionError,
    UnsupportedEdgeWeightType,
)
from ctspkit.utils.log import logger

NODE_COORD_SECTION = "NODE_COORD_SECTION"
EDGE_WEIGHT_SECTION = "EDGE_WEIGHT_SECTION"
GTSP_SET_SECTION = "GTSP_SET_SECTION"
_SECTIONS = {
    NODE_COORD_SECTION,
    EDGE_WEIGHT_SECTION,
    GTSP_SET_SECTION,
    "DISPLAY_DATA_SECTION",
    "TOUR_SECTION",
    "FIXED_EDGES_SECTION",
}
_MATRIX_FORMATS = ("FULL_MATRIX", "UPPER_ROW", "LOWER_DIAG_ROW")
_SET_TERMINATOR = "-1"


def parse_instance(text: str) -> Instance:
    """Parses the text of a GTSPLIB file into an Instance"""
    header, sections = _split(text)
    if GTSP_SET_SECTION not in sections:
        raise MissingSection(GTSP_SET_SECTION)
    n = int(header.get("DIMENSION", "0"))
    name = header.get("NAME", "")
    comment = header.get("COMMENT", "")
    edge_weight_type = header.get("EDGE_WEIGHT_TYPE", "").upper()

    if edge_weight_type == "EUC_2D":
        if NODE_COORD_SECTION not in sections:
            raise MissingSection(NODE_COORD_SECTION)
        file_ids, coordinates = _read_coordinates(sections[NODE_COORD_SECTION], n)
        clusters = _read_sets(sections[GTSP_SET_SECTION], file_ids, header)
        return Instance.from_coordinates(name, coordinates, clusters, comment)

    if edge_weight_type == "EXPLICIT":
        if EDGE_WEIGHT_SECTION not in sections:
            raise MissingSection(EDGE_WEIGHT_SECTION)
        edge_weight_format = header.get("EDGE_WEIGHT_FORMAT", "").upper()
        weights = _read_matrix(sections[EDGE_WEIGHT_SECTION], n, edge_weight_format)
        file_ids = {str(v): v for v in range(1, n + 1)}
        clusters = _read_sets(sections[GTSP_SET_SECTION], file_ids, header)
        return Instance.from_matrix(name, weights, clusters, comment)

    raise UnsupportedEdgeWeightType(edge_weight_type)


def write_instance(inst: Instance) -> str:
    """Renders an Instance as GTSPLIB text; parse_instance() reads
    it back to an equal Instance"""
    lines = [f"NAME : {inst.name}", "TYPE : GTSP"]
    if inst.comment:
        lines.append(f"COMMENT : {inst.comment}")
    lines += [f"DIMENSION : {inst.n}", f"GTSP_SETS : {inst.m}"]
    if inst.distance_kind == DistanceKind.EUC_2D_ROUNDED:
        lines.append("EDGE_WEIGHT_TYPE : EUC_2D")
        lines.append(NODE_COORD_SECTION)
        for vertex, (x, y) in enumerate(inst.coordinates, start=1):
            lines.append(f"{vertex} {format_number(x)} {format_number(y)}")
    else:
        lines.append("EDGE_WEIGHT_TYPE : EXPLICIT")
        lines.append("EDGE_WEIGHT_FORMAT : FULL_MATRIX")
        lines.append(EDGE_WEIGHT_SECTION)
        for row in inst.weights:
            lines.append(" ".join(str(int(w)) for w in row))
    lines.append(GTSP_SET_SECTION)
    for set_id, cluster in enumerate(inst.clusters, start=1):
        vertices = " ".join(str(v) for v in cluster)
        lines.append(f"{set_id} {vertices} {_SET_TERMINATOR}")
    lines.append("EOF")
    return "\n".join(lines) + "\n"


def read_instance(path: str) -> Instance:
    """Reads a GTSPLIB file from disk"""
    logger.debug("Reading instance: %s", path)
    with open(path, "r", encoding="ascii") as lines:
        return parse_instance(lines.read())


def save_instance(inst: Instance, path: str) -> str:
    """Writes an instance to disk as GTSPLIB text"""
    parent_dir = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent_dir, exist_ok=True)
    with open(path, "w", encoding="ascii") as out:
        out.write(write_instance(inst))
    return path


def format_number(value: float) -> str:
    """Shortest text that reads back to exactly the same float"""
    value = float(value)
    if value.is_integer() and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def _is_number(token: str) -> bool:
    try:
        float(token)
        return True
    except ValueError:
        return False


def _keyword(line: str) -> str:
    first = line.split()[0]
    return first.split(":")[0].strip().upper()


def _split(text: str) -> Tuple[Dict[str, str], Dict[str, List[str]]]:
    """Splits a file into header key/values and section token lists"""
    header = {}
    sections = {}
    lines = text.splitlines()
    idx = 0
    while idx < len(lines):
        line = lines[idx].strip()
        idx += 1
        if not line:
            continue
        keyword = _keyword(line)
        if keyword == "EOF":
            break
        if keyword in _SECTIONS:
            # Data may start on the keyword line itself
            tokens = [t for t in line.split()[1:] if t != ":"]
            while idx < len(lines):
                following = lines[idx].strip()
                if following and not _is_number(following.split()[0]):
                    break
                tokens.extend(following.split())
                idx += 1
            sections[keyword] = tokens
            continue
        if ":" in line:
            value = line.split(":", 1)[1].strip()
        else:
            value = line[len(line.split()[0]) :].strip()
        header[keyword] = value
    return header, sections


def _read_coordinates(tokens: List[str], n: int) -> Tuple[Dict[str, int], list]:
    if len(tokens) % 3 != 0:
        raise DimensionMismatch(n, len(tokens) // 3)
    listed = len(tokens) // 3
    if listed != n:
        raise DimensionMismatch(n, listed)
    file_ids = {}
    coordinates = []
    for k in range(n):
        file_id, x, y = tokens[3 * k : 3 * k + 3]
        if file_id in file_ids:
            raise MalformedInstance(f"node {file_id} is listed twice")
        file_ids[file_id] = k + 1
        coordinates.append((float(x), float(y)))
    return file_ids, coordinates


def _integer_weight(token: str) -> int:
    value = float(token)
    if not value.is_integer():
        raise MalformedInstance(f"edge weight {token} is not an integer")
    return int(value)


def _read_matrix(tokens: List[str], n: int, edge_weight_format: str) -> np.ndarray:
    if edge_weight_format not in _MATRIX_FORMATS:
        raise UnsupportedEdgeWeightType(f"EXPLICIT/{edge_weight_format}")
    values = [_integer_weight(t) for t in tokens]
    weights = np.zeros((n, n), dtype=np.int64)
    if edge_weight_format == "FULL_MATRIX":
        if len(values) != n * n:
            raise DimensionMismatch(n, _implied_dimension(len(values), "full"))
        weights[:, :] = np.array(values, dtype=np.int64).reshape(n, n)
    elif edge_weight_format == "UPPER_ROW":
        if len(values) != n * (n - 1) // 2:
            raise DimensionMismatch(n, _implied_dimension(len(values), "upper"))
        rows, cols = np.triu_indices(n, k=1)
        weights[rows, cols] = values
        weights[cols, rows] = values
    else:
        if len(values) != n * (n + 1) // 2:
            raise DimensionMismatch(n, _implied_dimension(len(values), "lower-diag"))
        rows, cols = np.tril_indices(n)
        weights[rows, cols] = values
        weights[cols, rows] = values
    return weights


def _implied_dimension(count: int, layout: str) -> int:
    if layout == "full":
        return int(round(count ** 0.5))
    if layout == "upper":
        return int(round((1 + (1 + 8 * count) ** 0.5) / 2))
    return int(round((-1 + (1 + 8 * count) ** 0.5) / 2))


def _read_sets(
    tokens: List[str], file_ids: Dict[str, int], header: Dict[str, str]
) -> List[List[int]]:
    clusters = []
    current = None
    for token in tokens:
        if current is None:
            # Set id; the order of sets in the file is kept
            current = []
            continue
        if token == _SET_TERMINATOR:
            clusters.append(current)
            current = None
            continue
        if token not in file_ids:
            raise PartitionError(f"set member {token} is not a listed vertex")
        current.append(file_ids[token])
    if current is not None:
        raise PartitionError("last set is not terminated by -1")
    declared = header.get("GTSP_SETS")
    if declared is not None and int(declared) != len(clusters):
        raise PartitionError(f"GTSP_SETS is {declared} but {len(clusters)} sets are listed")
    return clusters
