from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy.combinatorics import Permutation

from src.errors import EngineError, InvalidInputError

Vector = Tuple[int, int]
Linear = Tuple[int, int, int, int]  # row-major 2x2 over F_2

POINTS: List[Vector] = [(0, 0), (1, 0), (0, 1), (1, 1)]
VECTOR_NAMES: Dict[Vector, str] = {(0, 0): "1", (1, 0): "e", (0, 1): "f", (1, 1): "ef"}
IDENTITY_LINEAR: Linear = (1, 0, 0, 1)


def _apply_linear(a: Linear, v: Vector) -> Vector:
    return ((a[0] * v[0] + a[1] * v[1]) % 2, (a[2] * v[0] + a[3] * v[1]) % 2)


def _compose_linear(a: Linear, b: Linear) -> Linear:
    return (
        (a[0] * b[0] + a[1] * b[2]) % 2,
        (a[0] * b[1] + a[1] * b[3]) % 2,
        (a[2] * b[0] + a[3] * b[2]) % 2,
        (a[2] * b[1] + a[3] * b[3]) % 2,
    )


@dataclass(frozen=True)
class AffineElement:
    """x -> A x + v on F_2^2, i.e. the pair (v, A) of E x| GL_2(F_2)"""

    vector: Vector
    linear: Linear

    def apply(self, point: Vector) -> Vector:
        image = _apply_linear(self.linear, point)
        return ((image[0] + self.vector[0]) % 2, (image[1] + self.vector[1]) % 2)

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        shifted = _apply_linear(self.linear, other.vector)
        return AffineElement(
            vector=((self.vector[0] + shifted[0]) % 2, (self.vector[1] + shifted[1]) % 2),
            linear=_compose_linear(self.linear, other.linear),
        )

    def linear_label(self) -> str:
        """The permutation of {e, f, ef} induced by A, in cycle notation"""
        nonzero = POINTS[1:]
        perm = Permutation([nonzero.index(_apply_linear(self.linear, v)) for v in nonzero])
        cycles = perm.cyclic_form
        if not cycles:
            return "()"
        return "".join("(" + ",".join(VECTOR_NAMES[nonzero[i]] for i in cycle) + ")" for cycle in cycles)

    @property
    def label(self) -> str:
        name = VECTOR_NAMES[self.vector]
        if self.linear == IDENTITY_LINEAR:
            return name
        return f"{name}:{self.linear_label()}"

    def point_permutation(self) -> Permutation:
        return Permutation([POINTS.index(self.apply(p)) for p in POINTS])


class FiniteGroupModel:
    """A finite group given by labels and a full multiplication table"""

    def __init__(self, labels: Sequence[str], table: np.ndarray):
        self.labels = list(labels)
        self.table = np.asarray(table, dtype=np.int64)
        self.order = len(self.labels)
        self._index = {label: i for i, label in enumerate(self.labels)}
        self.identity = self._find_identity()
        self.inverses = self._find_inverses()
        self.verify()

    @classmethod
    def trivial(cls) -> "FiniteGroupModel":
        return cls(["1"], np.zeros((1, 1), dtype=np.int64))

    def _find_identity(self) -> int:
        everything = np.arange(self.order)
        for i in range(self.order):
            if np.array_equal(self.table[i], everything) and np.array_equal(self.table[:, i], everything):
                return i
        raise EngineError("Multiplication table has no identity")

    def _find_inverses(self) -> List[int]:
        inverses = []
        for i in range(self.order):
            found = np.nonzero(self.table[i] == self.identity)[0]
            if len(found) != 1 or self.table[found[0], i] != self.identity:
                raise EngineError(f"{self.labels[i]} has no two-sided inverse")
            inverses.append(int(found[0]))
        return inverses

    def verify(self):
        t = self.table
        # (ab)c = a(bc) for all triples
        if not np.array_equal(t[t, :], t[:, t]):
            raise EngineError("Multiplication table is not associative")

    def index(self, label: str) -> int:
        if label not in self._index:
            raise InvalidInputError(f"Unknown group element {label!r}")
        return self._index[label]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, x: int, by: int) -> int:
        """by x by^-1"""
        return self.mul(self.mul(by, x), self.inv(by))

    def element_order(self, a: int) -> int:
        order, current = 1, a
        while current != self.identity:
            current = self.mul(current, a)
            order += 1
        return order

    def power(self, a: int, n: int) -> int:
        result = self.identity
        for _ in range(n):
            result = self.mul(result, a)
        return result

    def centralizer(self, a: int) -> List[int]:
        return [g for g in range(self.order) if self.mul(g, a) == self.mul(a, g)]

    def center(self) -> List[int]:
        return [a for a in range(self.order) if len(self.centralizer(a)) == self.order]

    def generated_subgroup(self, generators: Sequence[int]) -> List[int]:
        members = {self.identity}
        frontier = [self.identity]
        while frontier:
            next_frontier = []
            for x in frontier:
                for g in generators:
                    y = self.mul(x, g)
                    if y not in members:
                        members.add(y)
                        next_frontier.append(y)
            frontier = next_frontier
        return sorted(members)


class Sym4Model(FiniteGroupModel):
    """Sym_4 as E x| Sym_3 = F_2^2 x| GL_2(F_2), acting on the four points of F_2^2"""

    def __init__(self, elements: Sequence[AffineElement]):
        self.elements = list(elements)
        position = {el: i for i, el in enumerate(self.elements)}
        table = np.array([[position[a * b] for b in self.elements] for a in self.elements], dtype=np.int64)
        super().__init__([el.label for el in self.elements], table)

    def in_translations(self, a: int) -> bool:
        """Whether a lies in the normal subgroup E"""
        return self.elements[a].linear == IDENTITY_LINEAR

    def translations(self) -> List[int]:
        return [a for a in range(self.order) if self.in_translations(a)]

    def quotient_order(self, a: int) -> int:
        """Order of the image of a in Sym_4 / E = Sym_3"""
        linear = self.elements[a].linear
        order, current = 1, linear
        while current != IDENTITY_LINEAR:
            current = _compose_linear(current, linear)
            order += 1
        return order

    def point_permutation(self, a: int) -> Permutation:
        return self.elements[a].point_permutation()


def build_sym4_model() -> Sym4Model:
    linears = [m for m in product(range(2), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % 2]
    linears.sort(key=lambda m: (m != IDENTITY_LINEAR, m))
    return Sym4Model([AffineElement(vector=v, linear=m) for m in linears for v in POINTS])


def g_image(model: Sym4Model) -> Optional[int]:
    """First element of order 4 squaring to e whose conjugation fixes e and swaps f and ef"""
    e, f, ef = (model.index(name) for name in ("e", "f", "ef"))
    for g in range(model.order):
        if model.element_order(g) != 4 or model.power(g, 2) != e:
            continue
        if model.conj(e, g) == e and model.conj(f, g) == ef and model.conj(ef, g) == f:
            return g
    return None
