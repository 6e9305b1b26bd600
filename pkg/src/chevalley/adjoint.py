from functools import lru_cache
from typing import Dict, Iterable, Sequence, Tuple

import galois
import numpy as np

from src.chevalley.basis import ChevalleyBasis, build_chevalley_basis
from src.errors import FieldError, ParameterError
from src.finitefield import FieldElem, FiniteField
from src.finitefield.field import Scalar
from src.lattices import TorsionTorusElement
from src.logger import logger
from src.rootsystem import build_root_system
from src.rootsystem.roots import RootLike

AdjointMatrix = galois.FieldArray

ROOT_OF_UNITY_BASE = 16


class AdjointEngine:
    """Steinberg generators as exact matrices on Lie(G) over a finite field"""

    def __init__(self, basis: ChevalleyBasis, field: FiniteField):
        self.basis = basis
        self.rs = basis.rs
        self.field = field
        self.gf = field.gf
        self.dim = basis.dim
        self._divided: Dict[int, Tuple[AdjointMatrix, AdjointMatrix]] = {}
        self._ad_field = None
        self._zeta_base = None
        if (field.order - 1) % ROOT_OF_UNITY_BASE == 0:
            self._zeta_base = field.primitive_root_of_unity(ROOT_OF_UNITY_BASE)
        logger.info(f"Adjoint engine ready over GF({field.p}^{field.k}), dim {self.dim}")

    # Scalars
    def scalar(self, t: Scalar) -> FieldElem:
        return self.field.element(t)

    def root_of_unity(self, m: int) -> FieldElem:
        """zeta_m, taken as a power of the fixed zeta_16 whenever m | 16"""
        if self._zeta_base is not None and ROOT_OF_UNITY_BASE % m == 0:
            return self._zeta_base ** (ROOT_OF_UNITY_BASE // m)
        if (self.field.order - 1) % m:
            raise FieldError(f"GF({self.field.order}) has no primitive {m}-th root of unity")
        return self.field.primitive_root_of_unity(m)

    # Matrices
    def identity(self) -> AdjointMatrix:
        return self.gf.Identity(self.dim)

    def _diagonal(self, values: Sequence[int]) -> AdjointMatrix:
        matrix = self.gf.Zeros((self.dim, self.dim))
        idx = np.arange(self.dim)
        matrix[idx, idx] = self.gf(list(values))
        return matrix

    def divided_powers(self, root: RootLike) -> Tuple[AdjointMatrix, AdjointMatrix]:
        idx = self.rs.index(root)
        if idx not in self._divided:
            first, second = self.basis.divided_powers(root)
            self._divided[idx] = (self.field.matrix(first), self.field.matrix(second))
        return self._divided[idx]

    def x_matrix(self, root: RootLike, t: Scalar) -> AdjointMatrix:
        """x_alpha(t) = 1 + t ad e_alpha + t^2 (ad e_alpha)^2 / 2"""
        t = self.scalar(t)
        first, second = self.divided_powers(root)
        return self.identity() + t * first + (t * t) * second

    def w_matrix(self, root: RootLike, t: Scalar = 1) -> AdjointMatrix:
        """w_alpha(t) = x_alpha(t) x_{-alpha}(-t^-1) x_alpha(t)"""
        t = self.scalar(t)
        if self.field.is_zero(t):
            raise ParameterError(f"w_{root}(0) is undefined")
        outer = self.x_matrix(root, t)
        alpha = self.rs.root_by_coeffs(root)
        return outer @ self.x_matrix(-alpha, -(t ** -1)) @ outer

    def h_matrix(self, root: RootLike, t: Scalar) -> AdjointMatrix:
        """Diagonal: e_beta -> t^<beta, alpha^vee> e_beta, identity on the Cartan part"""
        t = self.scalar(t)
        if self.field.is_zero(t):
            raise ParameterError(f"h_{root}(0) is undefined")
        exponents = self.rs.pairing_matrix[:, self.rs.index(root)]
        powers = {int(e): int(t ** int(e)) for e in set(exponents.tolist())}
        return self._diagonal([powers[int(e)] for e in exponents] + [1] * self.rs.rank)

    def torsion_to_matrix(self, v: TorsionTorusElement) -> AdjointMatrix:
        """e_beta -> zeta_m^<beta, v> e_beta"""
        zeta = self.root_of_unity(v.modulus)
        exponents = (self.rs.root_matrix @ self.rs.cartan @ v.as_array()) % v.modulus
        powers = {int(e): int(zeta ** int(e)) for e in set(exponents.tolist())}
        return self._diagonal([powers[int(e)] for e in exponents] + [1] * self.rs.rank)

    # Linear algebra
    def is_diagonal(self, m: AdjointMatrix) -> bool:
        raw = m.view(np.ndarray)
        return not np.any(raw - np.diag(np.diag(raw)))

    def fixed_space_dim(self, m: AdjointMatrix) -> int:
        """dim ker(M - I)"""
        if self.is_diagonal(m):
            return int(np.count_nonzero(np.diag(m.view(np.ndarray)) == 1))
        return self.dim - int(np.linalg.matrix_rank(m - self.identity()))

    def common_fixed_space_dim(self, matrices: Iterable[AdjointMatrix]) -> int:
        ident = self.identity()
        stacked = np.vstack([(m - ident).view(np.ndarray) for m in matrices])
        return self.dim - int(np.linalg.matrix_rank(self.gf(stacked)))

    def inverse(self, m: AdjointMatrix) -> AdjointMatrix:
        return np.linalg.inv(m)

    def equal(self, a: AdjointMatrix, b: AdjointMatrix) -> bool:
        return np.array_equal(a.view(np.ndarray), b.view(np.ndarray))

    def is_identity(self, m: AdjointMatrix) -> bool:
        return self.equal(m, self.identity())

    def commutes(self, a: AdjointMatrix, b: AdjointMatrix) -> bool:
        return self.equal(a @ b, b @ a)

    def conjugate(self, a: AdjointMatrix, b: AdjointMatrix) -> AdjointMatrix:
        """a b a^-1"""
        return a @ b @ self.inverse(a)

    def commutator(self, a: AdjointMatrix, b: AdjointMatrix) -> AdjointMatrix:
        """a^-1 b^-1 a b"""
        return self.inverse(a) @ self.inverse(b) @ a @ b

    def _ad_in_field(self):
        if self._ad_field is None:
            self._ad_field = self.field.matrix(self.basis.ad)
        return self._ad_field

    def bracket(self, u: FieldElem, v: FieldElem) -> FieldElem:
        """Lie bracket of two coordinate vectors"""
        ad = self._ad_in_field()
        result = self.gf.Zeros(self.dim)
        for k in np.nonzero(u.view(np.ndarray))[0]:
            result += u[k] * (ad[k] @ v)
        return result

    def preserves_bracket(self, m: AdjointMatrix, x: int, y: int) -> bool:
        """M [b_x, b_y] = [M b_x, M b_y]"""
        ad = self._ad_in_field()
        lhs = m @ ad[x][:, y]
        rhs = self.bracket(m[:, x], m[:, y])
        return np.array_equal(lhs.view(np.ndarray), rhs.view(np.ndarray))


@lru_cache(maxsize=None)
def get_engine(p: int, type_label: str = "E7") -> AdjointEngine:
    """Engine over the smallest extension of GF(p) with a primitive 16th root of unity"""
    field = FiniteField.with_roots_of_unity(p, ROOT_OF_UNITY_BASE)
    return AdjointEngine(build_chevalley_basis(build_root_system(type_label)), field)
