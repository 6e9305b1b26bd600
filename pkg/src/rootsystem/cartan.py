import re
from typing import List, Tuple

import numpy as np

from src.errors import UnsupportedTypeError

_TYPE_PATTERN = re.compile(r"^([ADE])(\d+)$")

# Bourbaki node labels, 1-based.
_E_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]


def parse_type(type_label: str) -> Tuple[str, int]:
    """Split a Cartan type tag such as "E7" into family and rank"""
    match = _TYPE_PATTERN.match(type_label.strip().upper())
    if match is None:
        raise UnsupportedTypeError(f"Unsupported Cartan type: {type_label!r}")

    family, rank = match.group(1), int(match.group(2))
    if family == "A" and rank >= 1:
        return family, rank
    if family == "D" and rank >= 4:
        return family, rank
    if family == "E" and rank in (6, 7, 8):
        return family, rank
    raise UnsupportedTypeError(f"Unsupported Cartan type: {type_label!r}")


def dynkin_edges(type_label: str) -> List[Tuple[int, int]]:
    family, rank = parse_type(type_label)
    if family == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    return [(i, j) for i, j in _E_EDGES if i <= rank and j <= rank]


def cartan_matrix(type_label: str) -> np.ndarray:
    """Cartan matrix of a simply-laced type with entries <alpha_i, alpha_j^vee>"""
    _, rank = parse_type(type_label)
    matrix = 2 * np.eye(rank, dtype=np.int64)
    for i, j in dynkin_edges(type_label):
        matrix[i - 1, j - 1] = -1
        matrix[j - 1, i - 1] = -1
    return matrix


_E_POSITIVE_ROOTS = {6: 36, 7: 63, 8: 120}


def positive_root_count(type_label: str) -> int:
    family, rank = parse_type(type_label)
    if family == "A":
        return rank * (rank + 1) // 2
    if family == "D":
        return rank * (rank - 1)
    return _E_POSITIVE_ROOTS[rank]
