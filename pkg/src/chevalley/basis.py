from functools import lru_cache
from random import Random
from typing import Dict, List, Tuple

import numpy as np

from src.errors import EngineError, UnsupportedTypeError
from src.logger import logger
from src.rootsystem import Root, RootSystem
from src.rootsystem.roots import RootLike

SIGN_CONVENTION_ID = "extraspecial-positive/closure-order"


class ChevalleyBasis:
    """Chevalley basis of a simply-laced Lie algebra, built over the canonical root order.

    Basis order: e_alpha for every root in the root system's order, then
    h_1, ..., h_rank. Signs start from the bimultiplicative cocycle
    eps(a, b) = (-1)^(sum a_i b_i + sum_{i<j adjacent} a_i b_j) and every
    positive non-simple root vector (with its negative) is then rescaled by
    +-1 so that N(alpha, beta) = +1 on each extraspecial pair.
    """

    def __init__(self, rs: RootSystem):
        if not np.array_equal(rs.cartan, rs.cartan.T):
            raise UnsupportedTypeError(f"{rs.type_label} is not simply laced")

        self.rs = rs
        self.rank = rs.rank
        self.n_roots = len(rs)
        self.dim = self.n_roots + self.rank
        self.sign_convention_id = SIGN_CONVENTION_ID

        self._edges = [
            (i, j) for i in range(self.rank) for j in range(i + 1, self.rank) if rs.cartan[i, j] != 0
        ]
        self._simple_idx = [rs.index(a) for a in rs.simple_roots]

        self.extraspecial_pairs: Dict[Root, Tuple[Root, Root]] = {}
        self._rescale = self._extraspecial_signs()
        self.structure_constants: Dict[Tuple[int, int], int] = self._structure_constants()
        self.ad = self._adjoint_tensor()
        logger.info(f"Chevalley basis for {rs.type_label} built: dim {self.dim}, "
                    f"{len(self.structure_constants)} nonzero N, convention {self.sign_convention_id}")

    # Signs
    def _cocycle(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> int:
        exponent = sum(x * y for x, y in zip(a, b)) + sum(a[i] * b[j] for i, j in self._edges)
        return -1 if exponent % 2 else 1

    def _raw_constant(self, alpha: Root, beta: Root) -> int:
        gamma = self.rs.add(alpha, beta)
        signs = [1 if r.is_positive else -1 for r in (alpha, beta, gamma)]
        return signs[0] * signs[1] * signs[2] * self._cocycle(alpha.coeffs, beta.coeffs)

    def _extraspecial_signs(self) -> Dict[Tuple[int, ...], int]:
        positive = self.rs.positive_roots
        position = {r: i for i, r in enumerate(positive)}
        rescale = {}
        for xi in positive:
            if xi.height == 1:
                rescale[xi.coeffs] = 1
                continue
            pair = None
            for alpha in positive:
                beta = self.rs.add(xi, -alpha)
                if beta is not None and beta.is_positive and position[alpha] < position[beta]:
                    pair = (alpha, beta)
                    break
            if pair is None:
                raise EngineError(f"No extraspecial pair for {xi}")
            alpha, beta = pair
            self.extraspecial_pairs[xi] = pair
            rescale[xi.coeffs] = self._raw_constant(alpha, beta) * rescale[alpha.coeffs] * rescale[beta.coeffs]
        return rescale

    def _scale(self, root: Root) -> int:
        return self._rescale[root.coeffs if root.is_positive else (-root).coeffs]

    def _structure_constants(self) -> Dict[Tuple[int, int], int]:
        constants = {}
        roots = self.rs.roots
        for i, alpha in enumerate(roots):
            for j, beta in enumerate(roots):
                gamma = self.rs.add(alpha, beta)
                if gamma is None:
                    continue
                constants[(i, j)] = (
                    self._raw_constant(alpha, beta) * self._scale(alpha) * self._scale(beta) * self._scale(gamma)
                )
        return constants

    def structure_constant(self, alpha: RootLike, beta: RootLike) -> int:
        """N(alpha, beta), or 0 when alpha + beta is not a root"""
        return self.structure_constants.get((self.rs.index(alpha), self.rs.index(beta)), 0)

    # Brackets
    def root_index(self, root: RootLike) -> int:
        return self.rs.index(root)

    def cartan_index(self, i: int) -> int:
        """Position of h_i (1-based label) in the basis"""
        return self.n_roots + i - 1

    def bracket_basis(self, x: int, y: int) -> Dict[int, int]:
        """[b_x, b_y] as {basis index: integer coefficient}"""
        n = self.n_roots
        if x >= n and y >= n:
            return {}
        if x >= n:
            value = int(self.rs.pairing_matrix[y, self._simple_idx[x - n]])
            return {y: value} if value else {}
        if y >= n:
            return {k: -v for k, v in self.bracket_basis(y, x).items()}

        alpha, beta = self.rs.roots[x], self.rs.roots[y]
        if alpha == -beta:
            coroot = self.rs.coroot_matrix[x]
            return {n + i: int(c) for i, c in enumerate(coroot) if c}
        gamma = self.rs.add(alpha, beta)
        if gamma is None:
            return {}
        return {self.rs.index(gamma): self.structure_constants[(x, y)]}

    def _adjoint_tensor(self) -> np.ndarray:
        # ad[x][:, y] = coordinates of [b_x, b_y]
        ad = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for x in range(self.dim):
            for y in range(self.dim):
                for z, value in self.bracket_basis(x, y).items():
                    ad[x, z, y] = value
        return ad

    def ad_matrix(self, root: RootLike) -> np.ndarray:
        return self.ad[self.rs.index(root)]

    def divided_powers(self, root: RootLike) -> Tuple[np.ndarray, np.ndarray]:
        """(ad e_alpha, (ad e_alpha)^2 / 2) as integer matrices"""
        first = self.ad_matrix(root)
        square = first @ first
        if np.any(square % 2):
            raise EngineError(f"(ad e_{root})^2 / 2 is not integral")
        if np.any(first @ square):
            raise EngineError(f"(ad e_{root})^3 does not vanish on the adjoint module")
        return first, square // 2

    # Self-checks
    def antisymmetry_violations(self) -> List[Tuple[str, str]]:
        violations = []
        for (i, j), value in self.structure_constants.items():
            if abs(value) != 1 or self.structure_constants.get((j, i)) != -value:
                violations.append((str(self.rs.roots[i]), str(self.rs.roots[j])))
        return violations

    def jacobi_residual(self, x: int, y: int, z: int) -> np.ndarray:
        ad = self.ad
        return ad[x] @ ad[y][:, z] + ad[y] @ ad[z][:, x] + ad[z] @ ad[x][:, y]

    def jacobi_failures(self, samples: int, rng: Random) -> int:
        failures = 0
        for _ in range(samples):
            x, y, z = (rng.randrange(self.dim) for _ in range(3))
            if np.any(self.jacobi_residual(x, y, z)):
                failures += 1
                logger.error(f"Jacobi fails on basis triple ({x}, {y}, {z})")
        return failures

    def labels(self) -> List[str]:
        return [f"e_{r}" for r in self.rs.roots] + [f"h_{i}" for i in range(1, self.rank + 1)]


@lru_cache(maxsize=None)
def build_chevalley_basis(rs: RootSystem) -> ChevalleyBasis:
    return ChevalleyBasis(rs)
