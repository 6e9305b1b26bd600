from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from src.errors import EngineError, InvalidInputError, NotARootError, UnsupportedTypeError
from src.logger import logger
from src.rootsystem.cartan import cartan_matrix, parse_type, positive_root_count


@dataclass(frozen=True)
class Root:
    """A root stored as its coefficient vector over the simple roots"""

    coeffs: Tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    def __str__(self) -> str:
        sign = "-" if self.height < 0 else ""
        return sign + "".join(str(abs(c)) for c in self.coeffs)


RootLike = Union[Root, str, Sequence[int]]


def parse_root(value: RootLike) -> Tuple[int, ...]:
    """Coefficient tuple from a Root, a digit string like "-1122100", or a sequence"""
    if isinstance(value, Root):
        return value.coeffs
    if isinstance(value, str):
        text = value.strip()
        sign = -1 if text.startswith("-") else 1
        digits = text.lstrip("+-")
        if not digits.isdigit():
            raise NotARootError(f"Cannot read root coefficients from {value!r}")
        return tuple(sign * int(d) for d in digits)
    return tuple(int(c) for c in value)


@dataclass(frozen=True)
class SubsystemBase:
    base: Tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.base)

    def __iter__(self) -> Iterator[Root]:
        return iter(self.base)


def close_positive_roots(cartan: np.ndarray, order: Optional[Sequence[int]] = None) -> List[Tuple[int, ...]]:
    """Breadth-first closure of the simple base under adding simple roots.

    A simple root alpha_i can be added to beta exactly when the alpha_i-string
    through beta continues upwards, i.e. p - <beta, alpha_i^vee> > 0.
    The result is in canonical order whatever order the simple roots are tried in.
    """
    rank = cartan.shape[0]
    order = list(range(rank)) if order is None else list(order)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]

    level = [simple[i] for i in order]
    known = set(level)
    closed = list(level)
    while level:
        next_level = []
        for root in level:
            for i in order:
                p = 0
                lowered = list(root)
                while True:
                    lowered[i] -= 1
                    if tuple(lowered) not in known:
                        break
                    p += 1
                q = p - int(np.dot(root, cartan[:, i]))
                if q <= 0:
                    continue
                raised = list(root)
                raised[i] += 1
                raised = tuple(raised)
                if raised not in known:
                    known.add(raised)
                    next_level.append(raised)
        closed.extend(next_level)
        level = next_level
    return sorted(closed, key=canonical_key)


def canonical_key(coeffs: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Height first, then the coefficient vector in descending order (alpha_1 before alpha_7)"""
    return sum(coeffs), tuple(-c for c in coeffs)


class RootSystem:
    """Roots of a simply-laced type together with the Cartan pairing"""

    def __init__(self, type_label: str, cartan: np.ndarray, order: Optional[Sequence[int]] = None):
        if not np.array_equal(cartan, cartan.T):
            raise UnsupportedTypeError(f"{type_label} is not simply laced")

        self.type_label = type_label
        self.cartan = cartan
        self.rank = cartan.shape[0]

        positive = close_positive_roots(cartan, order)
        self.positive_roots: Tuple[Root, ...] = tuple(Root(c) for c in positive)
        self.roots: Tuple[Root, ...] = self.positive_roots + tuple(-r for r in self.positive_roots)
        self._index: Dict[Tuple[int, ...], int] = {r.coeffs: i for i, r in enumerate(self.roots)}

        sym = sympy.Matrix(cartan.tolist())
        self.determinant = int(sym.det())
        self._adjugate = np.array(sym.adjugate().tolist(), dtype=np.int64)

        self.root_matrix = np.array([r.coeffs for r in self.roots], dtype=np.int64)
        self.coroot_matrix = np.array([self._solve_coroot(r) for r in self.roots], dtype=np.int64)
        # pairing_matrix[i, j] = <root_i, root_j^vee>
        self.pairing_matrix = self.root_matrix @ cartan @ self.coroot_matrix.T

    def _solve_coroot(self, root: Root) -> np.ndarray:
        # C c = (<alpha_j, root^vee>)_j, solved exactly through the adjugate
        a = root.as_array()
        norm = int(a @ self.cartan @ a)
        values = 2 * (self.cartan @ a)
        if np.any(values % norm):
            raise EngineError(f"Coroot of {root} is not integral")
        numerator = self._adjugate @ (values // norm)
        if np.any(numerator % self.determinant):
            raise EngineError(f"Coroot of {root} is not integral")
        return numerator // self.determinant

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[Root]:
        return iter(self.roots)

    def __contains__(self, item) -> bool:
        try:
            return parse_root(item) in self._index
        except (NotARootError, TypeError, ValueError):
            return False

    def index(self, root: RootLike) -> int:
        coeffs = parse_root(root)
        if coeffs not in self._index:
            raise NotARootError(f"{root} is not a root of {self.type_label}")
        return self._index[coeffs]

    def root_by_coeffs(self, coeffs: RootLike) -> Root:
        return self.roots[self.index(coeffs)]

    def simple_root(self, i: int) -> Root:
        """Simple root alpha_i, Bourbaki label i (1-based)"""
        if not 1 <= i <= self.rank:
            raise NotARootError(f"No simple root alpha_{i} in {self.type_label}")
        return self.root_by_coeffs(tuple(int(j == i - 1) for j in range(self.rank)))

    @property
    def simple_roots(self) -> Tuple[Root, ...]:
        return tuple(self.simple_root(i) for i in range(1, self.rank + 1))

    def coroot_coeffs(self, root: RootLike) -> np.ndarray:
        return self.coroot_matrix[self.index(root)].copy()

    def pairing(self, beta: RootLike, alpha: RootLike) -> int:
        """Cartan integer <beta, alpha^vee>"""
        return int(self.pairing_matrix[self.index(beta), self.index(alpha)])

    def reflect(self, beta: RootLike, alpha: RootLike) -> Root:
        b = np.array(parse_root(beta))
        a = np.array(parse_root(alpha))
        return self.root_by_coeffs(b - self.pairing(beta, alpha) * a)

    def add(self, a: RootLike, b: RootLike) -> Optional[Root]:
        """a + b if it is a root, otherwise None"""
        coeffs = tuple(x + y for x, y in zip(parse_root(a), parse_root(b)))
        idx = self._index.get(coeffs)
        return None if idx is None else self.roots[idx]

    def highest_root(self) -> Root:
        top = max(r.height for r in self.positive_roots)
        candidates = [r for r in self.positive_roots if r.height == top]
        if len(candidates) != 1:
            raise EngineError(f"{self.type_label} has {len(candidates)} roots of maximal height")
        return candidates[0]

    def make_base(self, roots: Sequence[RootLike]) -> SubsystemBase:
        """Validate a list of roots as a simple base of the subsystem it spans"""
        base = tuple(self.root_by_coeffs(r) for r in roots)
        if sympy.Matrix([list(r.coeffs) for r in base]).rank() != len(base):
            raise InvalidInputError("Subsystem base is not linearly independent")
        for a, b in combinations(base, 2):
            if self.pairing(a, b) > 0:
                raise InvalidInputError(f"Positive Cartan integer between {a} and {b}")
        return SubsystemBase(base)

    def subsystem(self, base: SubsystemBase) -> FrozenSet[Root]:
        """All roots lying in the integer span of the base"""
        columns = sympy.Matrix([list(r.coeffs) for r in base]).T
        left_inverse = (columns.T * columns).inv() * columns.T
        denominator = int(sympy.ilcm(1, *[sympy.fraction(x)[1] for x in left_inverse]))
        scaled = np.array((left_inverse * denominator).tolist(), dtype=np.int64)
        basis = np.array(columns.tolist(), dtype=np.int64)

        solutions = scaled @ self.root_matrix.T
        members = []
        for j, root in enumerate(self.roots):
            if np.any(solutions[:, j] % denominator):
                continue
            x = solutions[:, j] // denominator
            if np.array_equal(basis @ x, self.root_matrix[j]):
                members.append(root)
        return frozenset(members)

    def subsystem_cartan(self, base: SubsystemBase) -> np.ndarray:
        return np.array([[self.pairing(a, b) for b in base] for a in base], dtype=np.int64)

    def pairwise_orthogonal(self, roots: Sequence[RootLike]) -> bool:
        return all(self.pairing(a, b) == 0 for a, b in combinations(roots, 2))

    def export_lines(self) -> List[str]:
        """Roots as lines of space-separated coefficients, positive roots first"""
        return [" ".join(str(c) for c in r.coeffs) for r in self.roots]


def build_root_system(type_label: str = "E7") -> RootSystem:
    family, rank = parse_type(type_label)
    return _build_root_system(f"{family}{rank}")


@lru_cache(maxsize=None)
def _build_root_system(type_label: str) -> RootSystem:
    rs = RootSystem(type_label, cartan_matrix(type_label))
    expected = positive_root_count(type_label)
    if len(rs.positive_roots) != expected or len(rs) != 2 * expected:
        raise EngineError(f"{type_label} closed to {len(rs)} roots, expected {2 * expected}")
    logger.info(f"Built root system {rs.type_label}: {len(rs)} roots, {len(rs.positive_roots)} positive")
    return rs


def standard_a7_base(rs: RootSystem) -> SubsystemBase:
    """Base (-alpha_0, alpha_1, alpha_3, ..., alpha_7) of the A7 subsystem of E7"""
    if rs.type_label != "E7":
        raise UnsupportedTypeError(f"The A7 base is defined for E7, not {rs.type_label}")
    labels = (1, 3, 4, 5, 6, 7)
    return rs.make_base([-rs.highest_root()] + [rs.simple_root(i) for i in labels])
