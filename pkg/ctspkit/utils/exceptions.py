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


class CtspError(Exception):
    """Base class for every error raised by ctspkit"""

    # Exit code used by the command line when this error escapes
    exit_code = 1


class MissingSection(CtspError):
    """Raised when an instance file lacks a required section"""

    def __init__(self, section: str):
        super().__init__(f"instance file has no {section}")


class PartitionError(CtspError):
    """Raised when clusters do not partition the vertex set"""

    def __init__(self, message: str):
        super().__init__(f"clusters do not partition the vertices: {message}")


class DimensionMismatch(CtspError):
    """Raised when the declared DIMENSION disagrees with the listed data"""

    def __init__(self, declared: int, listed: int):
        super().__init__(f"DIMENSION is {declared} but {listed} vertices are listed")


class MalformedInstance(CtspError):
    """Raised when instance file data cannot be read as written"""

    def __init__(self, message: str):
        super().__init__(f"malformed instance file: {message}")


class UnsupportedEdgeWeightType(CtspError):
    """Raised for TSPLIB distance types this package does not read"""

    def __init__(self, edge_weight_type: str):
        super().__init__(f"unsupported edge weight type/format: '{edge_weight_type}'")


class SelfLoop(CtspError):
    """Raised when the distance of a vertex to itself is requested"""

    def __init__(self, vertex: int):
        super().__init__(f"distance({vertex}, {vertex}) is undefined")


class InvalidConfig(CtspError):
    """Raised when a configuration value is out of range"""

    def __init__(self, message: str):
        super().__init__(f"invalid configuration: {message}")


class NotAPermutation(CtspError):
    """Raised when a tour is not a permutation of 1..n"""

    exit_code = 2

    def __init__(self, n: int, message: str):
        super().__init__(f"tour is not a permutation of 1..{n}: {message}")


class InfeasibleTour(CtspError):
    """Raised when a tour fails validation against an instance"""

    exit_code = 2

    def __init__(self, message: str):
        super().__init__(message)


class Overflow(CtspError):
    """Raised when a penalised cost cannot be represented in 64 bits"""

    exit_code = 3

    def __init__(self, n: int, max_distance: int):
        super().__init__(
            f"big-M for n={n}, max distance={max_distance} overflows 64-bit integers"
        )


class NegativeResult(CtspError):
    """Raised when recovering a cost from a tour that is not cluster-feasible"""

    exit_code = 2

    def __init__(self, tsp_cost: int, crossings: int, big_m: int):
        super().__init__(
            f"cost {tsp_cost} is below {crossings} x M={big_m}; "
            + "the tour is not cluster contiguous"
        )


class VertexSetMismatch(CtspError):
    """Raised when two parent tours do not cover the same vertices"""

    def __init__(self, n_a: int, n_b: int):
        super().__init__(f"parent tours have different vertex sets ({n_a} vs {n_b})")


class EmptyCycles(CtspError):
    """Raised when an E-set is requested from no AB-cycles"""

    def __init__(self):
        super().__init__("cannot select an E-set from an empty list of AB-cycles")


class InconsistentESet(CtspError):
    """Raised when an E-set does not fit the parent it is applied to"""

    def __init__(self, message: str):
        super().__init__(f"E-set does not match parent A: {message}")


class TooLarge(CtspError):
    """Raised when an exact or export routine exceeds its size guard"""

    exit_code = 3

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: size {size} exceeds the limit of {limit}")


class ZeroReference(CtspError):
    """Raised when a gap is computed against a non-positive reference"""

    def __init__(self, reference):
        super().__init__(f"reference cost must be positive, got {reference}")


class NonPositiveMetric(CtspError):
    """Raised when a performance profile receives a metric <= 0"""

    def __init__(self, algorithm: str, instance: str, value):
        super().__init__(
            f"metric for algorithm='{algorithm}' on instance='{instance}' "
            + f"must be positive, got {value}"
        )


class ExternalSolverError(CtspError):
    """Raised when the external MIP solver is missing or fails"""

    def __init__(self, message: str):
        super().__init__(message)


class ManifestError(CtspError):
    """Raised when a benchmark manifest cannot be read"""

    def __init__(self, line_number: int, line: str):
        super().__init__(f"manifest line {line_number} is malformed: '{line}'")
