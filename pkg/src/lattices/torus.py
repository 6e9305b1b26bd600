from enum import Enum
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Dict, Iterable, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.errors import ModulusMismatchError, NotAUnitError, NotSigmaStableError
from src.lattices.smith import invariant_factors, kernel_mod
from src.logger import logger
from src.rootsystem import RootSystem, SubsystemBase, build_root_system
from src.rootsystem.roots import RootLike


class IsogenyForm(str, Enum):
    SIMPLY_CONNECTED = "simply_connected"
    ADJOINT = "adjoint"


class TorsionTorusElement(BaseModel):
    """sum_i coeffs[i] * alpha_i^vee tensor zeta_m, coefficients reduced mod m"""

    model_config = ConfigDict(frozen=True)

    modulus: int = Field(ge=1)
    coeffs: Tuple[int, ...]

    @model_validator(mode="before")
    @classmethod
    def _reduce(cls, data):
        if isinstance(data, dict):
            modulus = data.get("modulus")
            if isinstance(modulus, int) and modulus >= 1 and "coeffs" in data:
                data = {**data, "coeffs": tuple(int(c) % modulus for c in data["coeffs"])}
        return data

    @classmethod
    def zero(cls, modulus: int, rank: int = 7) -> "TorsionTorusElement":
        return cls(modulus=modulus, coeffs=(0,) * rank)

    def _check_modulus(self, other: "TorsionTorusElement"):
        if self.modulus != other.modulus:
            raise ModulusMismatchError(f"Moduli differ: {self.modulus} vs {other.modulus}")

    def __add__(self, other: "TorsionTorusElement") -> "TorsionTorusElement":
        self._check_modulus(other)
        return TorsionTorusElement(
            modulus=self.modulus,
            coeffs=tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "TorsionTorusElement":
        return self.scale(-1)

    def __sub__(self, other: "TorsionTorusElement") -> "TorsionTorusElement":
        return self + (-other)

    def scale(self, k: int) -> "TorsionTorusElement":
        return TorsionTorusElement(modulus=self.modulus, coeffs=tuple(k * c for c in self.coeffs))

    def embed(self, modulus: int) -> "TorsionTorusElement":
        """Same torus element written over a multiple of the current modulus"""
        if modulus % self.modulus:
            raise ModulusMismatchError(f"{modulus} is not a multiple of {self.modulus}")
        factor = modulus // self.modulus
        return TorsionTorusElement(modulus=modulus, coeffs=tuple(factor * c for c in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)


class FrobeniusSpec(BaseModel):
    """t -> t^(twist * q) on the torus; twist = -1 models the twisted torus"""

    model_config = ConfigDict(frozen=True)

    q: int
    twist: int = 1

    @field_validator("twist")
    @classmethod
    def _sign(cls, value: int) -> int:
        if value not in (1, -1):
            raise ValueError("twist must be +1 or -1")
        return value

    def multiplier(self, modulus: int) -> int:
        k = (self.twist * self.q) % modulus
        if gcd(k, modulus) != 1:
            raise NotAUnitError(f"q = {self.q} is not a unit mod {modulus}")
        return k


class SubsystemCenter(BaseModel):
    form: IsogenyForm
    modulus: int
    generators: List[TorsionTorusElement]
    generator_orders: List[int]
    order: int
    members: List[TorsionTorusElement]


class TorusLattice:
    """Torsion of the maximal torus in coroot coordinates, in both isogeny forms.

    Simply connected equality is equality in (Z/m)^rank. Adjoint equality asks
    that a - b pairs to 0 mod m with every simple root, i.e. C (a - b) = 0 mod m.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.cartan = rs.cartan
        self.rank = rs.rank

    def h_element(self, terms: Iterable[Tuple[RootLike, int]], modulus: int) -> TorsionTorusElement:
        """prod h_alpha(zeta_m^k) as sum k * alpha^vee mod m"""
        total = np.zeros(self.rank, dtype=np.int64)
        for root, k in terms:
            total += int(k) * self.rs.coroot_coeffs(root)
        return TorsionTorusElement(modulus=modulus, coeffs=tuple(int(c) for c in total))

    def coroot_element(self, root: RootLike, modulus: int) -> TorsionTorusElement:
        return self.h_element([(root, 1)], modulus)

    def simple_pairings(self, a: TorsionTorusElement) -> np.ndarray:
        """(<alpha_j, a>)_j mod m"""
        return (self.cartan @ a.as_array()) % a.modulus

    def root_pairings(self, a: TorsionTorusElement) -> np.ndarray:
        """<beta, a> mod m for every root in the system's order"""
        return (self.rs.root_matrix @ self.cartan @ a.as_array()) % a.modulus

    def form_key(self, a: TorsionTorusElement, form: IsogenyForm) -> Tuple[int, ...]:
        if form == IsogenyForm.SIMPLY_CONNECTED:
            return a.coeffs
        return tuple(int(x) for x in self.simple_pairings(a))

    def is_trivial(self, a: TorsionTorusElement, form: IsogenyForm) -> bool:
        return not any(self.form_key(a, form))

    def equal_in_form(self, a: TorsionTorusElement, b: TorsionTorusElement, form: IsogenyForm) -> bool:
        a._check_modulus(b)
        return self.is_trivial(a - b, form)

    def element_order(self, a: TorsionTorusElement, form: IsogenyForm) -> int:
        for n in range(1, a.modulus + 1):
            if a.modulus % n == 0 and self.is_trivial(a.scale(n), form):
                return n
        return a.modulus

    def fundamental_group(self) -> List[int]:
        return [d for d in invariant_factors(self.cartan) if d != 1]

    def central_element_sc(self) -> TorsionTorusElement:
        """Generator of the center of the simply connected group.

        The center is the set of v with C v = 0 mod d, d the exponent of the
        fundamental group; for E7 this is h_{alpha_2}(-1) h_{alpha_5}(-1) h_{alpha_7}(-1).
        """
        factors = self.fundamental_group()
        if not factors:
            return TorsionTorusElement.zero(1, self.rank)
        exponent = factors[-1]
        kernel = kernel_mod(self.cartan, exponent)
        vector, _ = max(kernel, key=lambda item: item[1])
        return TorsionTorusElement(modulus=exponent, coeffs=tuple(int(c) for c in vector))

    def frobenius_act(self, a: TorsionTorusElement, spec: FrobeniusSpec) -> TorsionTorusElement:
        return a.scale(spec.multiplier(a.modulus))

    def in_derived_subgroup(self, a: TorsionTorusElement, spec: FrobeniusSpec) -> bool:
        """Whether the sigma-fixed adjoint element lifts to a sigma-fixed element of G_sc"""
        image = self.frobenius_act(a, spec)
        if not self.equal_in_form(image, a, IsogenyForm.ADJOINT):
            raise NotSigmaStableError(f"{a.coeffs} mod {a.modulus} is not fixed by q = {spec.q}, twist {spec.twist}")
        return self.equal_in_form(image, a, IsogenyForm.SIMPLY_CONNECTED)

    def subsystem_center(self, base: SubsystemBase, modulus: int, form: IsogenyForm) -> SubsystemCenter:
        """Elements of the subsystem's coroot span mod m killed by all subsystem roots"""
        sub_cartan = self.rs.subsystem_cartan(base)
        factors = [d for d in invariant_factors(sub_cartan) if d != 1]
        if factors and modulus % factors[-1]:
            logger.warning(f"Modulus {modulus} is not a multiple of the subsystem exponent {factors[-1]}")

        candidates = []
        for vector, _ in kernel_mod(sub_cartan, modulus):
            terms = [(root, int(c)) for root, c in zip(base, vector)]
            element = self.h_element(terms, modulus)
            if not self.is_trivial(element, form):
                candidates.append(element)

        members = self._span(candidates, modulus, form)
        generators = list(candidates)
        return SubsystemCenter(
            form=form,
            modulus=modulus,
            generators=generators,
            generator_orders=[self.element_order(g, form) for g in generators],
            order=len(members),
            members=sorted(members.values(), key=lambda e: self.form_key(e, form)),
        )

    def _span(self, generators: List[TorsionTorusElement], modulus: int, form: IsogenyForm) -> Dict[Tuple[int, ...], TorsionTorusElement]:
        zero = TorsionTorusElement.zero(modulus, self.rank)
        members = {self.form_key(zero, form): zero}
        frontier = [zero]
        while frontier:
            next_frontier = []
            for element in frontier:
                for g in generators:
                    candidate = element + g
                    key = self.form_key(candidate, form)
                    if key not in members:
                        members[key] = candidate
                        next_frontier.append(candidate)
            frontier = next_frontier
        return members

    def two_torsion_classes(self, modulus: int = 4) -> Dict[Tuple[int, ...], TorsionTorusElement]:
        """Adjoint classes of order <= 2 reachable by coroot vectors mod m (m even).

        Keyed by adjoint key; the first vector in lexicographic order represents
        each class.
        """
        classes: Dict[Tuple[int, ...], TorsionTorusElement] = {}
        for coeffs in product(range(modulus), repeat=self.rank):
            element = TorsionTorusElement(modulus=modulus, coeffs=coeffs)
            if not self.is_trivial(element.scale(2), IsogenyForm.ADJOINT):
                continue
            classes.setdefault(self.form_key(element, IsogenyForm.ADJOINT), element)
        return classes


@lru_cache(maxsize=None)
def get_lattice(type_label: str = "E7") -> TorusLattice:
    return TorusLattice(build_root_system(type_label))
