from math import gcd
from typing import List, Tuple

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from src.rootsystem.cartan import cartan_matrix


def invariant_factors(matrix: np.ndarray) -> List[int]:
    """Nonzero diagonal of the Smith normal form"""
    snf = smith_normal_form(Matrix(matrix.tolist()), domain=ZZ)
    diagonal = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    return [d for d in diagonal if d != 0]


def fundamental_group(type_label: str) -> List[int]:
    """Nontrivial invariant factors of the cokernel of the Cartan matrix"""
    return [d for d in invariant_factors(cartan_matrix(type_label)) if d != 1]


def _swap_rows(m: List[List[int]], i: int, j: int):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: List[List[int]], i: int, j: int):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: List[List[int]], target: int, source: int, factor: int):
    m[target] = [t + factor * s for t, s in zip(m[target], m[source])]


def _add_col(m: List[List[int]], target: int, source: int, factor: int):
    for row in m:
        row[target] += factor * row[source]


def _smallest_entry(a: List[List[int]], s: int):
    best = None
    for i in range(s, len(a)):
        for j in range(s, len(a[0])):
            if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_decomposition(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Smith form with transforms: returns (D, U, V) with U @ A @ V = D.

    U and V are unimodular; D is diagonal with d_1 | d_2 | ... and d_i >= 0.
    """
    a = [[int(x) for x in row] for row in np.asarray(matrix)]
    rows, cols = len(a), len(a[0])
    left = [[int(i == j) for j in range(rows)] for i in range(rows)]
    right = [[int(i == j) for j in range(cols)] for i in range(cols)]

    for s in range(min(rows, cols)):
        while True:
            pivot = _smallest_entry(a, s)
            if pivot is None:
                break
            i, j = pivot
            _swap_rows(a, s, i)
            _swap_rows(left, s, i)
            _swap_cols(a, s, j)
            _swap_cols(right, s, j)

            cleared = True
            for i in range(s + 1, rows):
                factor = a[i][s] // a[s][s]
                if factor:
                    _add_row(a, i, s, -factor)
                    _add_row(left, i, s, -factor)
                cleared = cleared and a[i][s] == 0
            for j in range(s + 1, cols):
                factor = a[s][j] // a[s][s]
                if factor:
                    _add_col(a, j, s, -factor)
                    _add_col(right, j, s, -factor)
                cleared = cleared and a[s][j] == 0
            if not cleared:
                continue

            # pivot must divide the rest of the block
            offender = next(
                (i for i in range(s + 1, rows) for j in range(s + 1, cols) if a[i][j] % a[s][s]),
                None,
            )
            if offender is None:
                break
            _add_row(a, s, offender, 1)
            _add_row(left, s, offender, 1)

        if a[s][s] < 0:
            a[s] = [-x for x in a[s]]
            left[s] = [-x for x in left[s]]

    return (
        np.array(a, dtype=np.int64),
        np.array(left, dtype=np.int64),
        np.array(right, dtype=np.int64),
    )


def kernel_mod(matrix: np.ndarray, modulus: int) -> List[Tuple[np.ndarray, int]]:
    """Generators of {c : A c = 0 mod m} with their orders, from the Smith form.

    With U A V = D and c = V y the condition becomes d_i y_i = 0 mod m, so
    y_i ranges over (m / gcd(d_i, m)) Z.
    """
    diagonal, _, right = smith_decomposition(matrix)
    rows, cols = diagonal.shape
    generators = []
    for i in range(cols):
        d = int(diagonal[i, i]) if i < rows else 0
        order = gcd(d, modulus)
        if order == 1:
            continue
        vector = (right[:, i] * (modulus // order)) % modulus
        generators.append((vector, order))
    return generators
