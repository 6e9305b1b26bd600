"""Finite fields GF(p^k) on top of galois.

Extension fields use the lexicographically smallest monic irreducible
polynomial of degree k, so two builds with the same (p, k) agree element
for element. Coefficient vectors are exposed in ascending order [a0, a1, ...];
galois itself stores them descending.
"""

from functools import lru_cache
from math import gcd
from typing import List, Sequence, Tuple, Union

import galois
import numpy as np
import sympy
from pydantic import BaseModel, ConfigDict, model_validator

from src.errors import FieldError, InvalidInputError
from src.logger import logger

FieldElem = galois.FieldArray
Scalar = Union[int, galois.FieldArray]


class FieldParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: int
    k: int = 1
    modulus_poly: Tuple[int, ...] = (1, 0)  # descending, monic

    @model_validator(mode="after")
    def _validate(self):
        if self.p == 2 or not sympy.isprime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.k < 1:
            raise ValueError("extension degree must be at least 1")
        if len(self.modulus_poly) != self.k + 1 or self.modulus_poly[0] != 1:
            raise ValueError("modulus polynomial must be monic of degree k")
        return self


def min_extension_degree(p: int, n: int) -> int:
    """Least k with n | p^k - 1"""
    if gcd(p, n) != 1:
        raise FieldError(f"gcd({p}, {n}) != 1")
    if n == 1:
        return 1
    return int(sympy.n_order(p, n))


def field_params(p: int, k: int) -> FieldParams:
    if p == 2 or not sympy.isprime(p):
        raise InvalidInputError(f"p must be an odd prime, got {p}")
    if k == 1:
        return FieldParams(p=p, k=1)
    poly = galois.irreducible_poly(p, k, method="min")
    if not poly.is_irreducible():
        raise FieldError(f"{poly} is not irreducible over GF({p})")
    return FieldParams(p=p, k=k, modulus_poly=tuple(int(c) for c in poly.coeffs))


class FiniteField:
    """Arithmetic in GF(p^k); elements are 0-d galois arrays"""

    def __init__(self, params: FieldParams):
        self.params = params
        if params.k == 1:
            self.gf = galois.GF(params.p)
        else:
            poly = galois.Poly(list(params.modulus_poly), field=galois.GF(params.p))
            self.gf = galois.GF(params.p ** params.k, irreducible_poly=poly)
        self.order = params.p ** params.k
        self.one = self.gf(1)
        self.zero = self.gf(0)
        self._roots_of_unity = {}
        logger.debug(f"Field GF({params.p}^{params.k}) ready, modulus {list(params.modulus_poly)}")

    @classmethod
    def with_roots_of_unity(cls, p: int, n: int) -> "FiniteField":
        """Smallest extension of GF(p) holding a primitive n-th root of unity"""
        return cls(field_params(p, min_extension_degree(p, n)))

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def k(self) -> int:
        return self.params.k

    def element(self, value: Scalar) -> FieldElem:
        if isinstance(value, galois.FieldArray):
            return value
        return self.gf(int(value) % self.params.p)

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElem:
        """Element from ascending polynomial-basis coordinates"""
        padded = [int(c) % self.params.p for c in coeffs] + [0] * (self.params.k - len(coeffs))
        return self.gf.Vector(padded[::-1])

    def coeffs(self, x: FieldElem) -> List[int]:
        return [int(c) for c in x.vector()[::-1]]

    def equal(self, x: Scalar, y: Scalar) -> bool:
        return int(self.element(x)) == int(self.element(y))

    def is_zero(self, x: Scalar) -> bool:
        return int(self.element(x)) == 0

    # Arithmetic
    def add(self, x: Scalar, y: Scalar) -> FieldElem:
        return self.element(x) + self.element(y)

    def negate(self, x: Scalar) -> FieldElem:
        return -self.element(x)

    def multiply(self, x: Scalar, y: Scalar) -> FieldElem:
        return self.element(x) * self.element(y)

    def invert(self, x: Scalar) -> FieldElem:
        if self.is_zero(x):
            raise FieldError("Cannot invert zero")
        return self.element(x) ** -1

    def power(self, x: Scalar, n: int) -> FieldElem:
        if n < 0:
            return self.invert(x) ** (-n)
        return self.element(x) ** n

    def element_order(self, x: Scalar) -> int:
        """Multiplicative order of a nonzero element"""
        if self.is_zero(x):
            raise FieldError("Zero has no multiplicative order")
        x = self.element(x)
        order = self.order - 1
        for prime in sympy.primefactors(order):
            while order % prime == 0 and self.equal(x ** (order // prime), 1):
                order //= prime
        return order

    def has_exact_order(self, x: FieldElem, n: int) -> bool:
        if not self.equal(x ** n, 1):
            return False
        return all(not self.equal(x ** (n // ell), 1) for ell in sympy.primefactors(n))

    def primitive_root_of_unity(self, n: int) -> FieldElem:
        """First element of exact order n among x^((q-1)/n), x = 2, 3, ... in integer order"""
        if n not in self._roots_of_unity:
            self._roots_of_unity[n] = self._search_root_of_unity(n)
        return self._roots_of_unity[n]

    def _search_root_of_unity(self, n: int) -> FieldElem:
        if (self.order - 1) % n:
            raise FieldError(f"{n} does not divide {self.order} - 1")
        if n == 1:
            return self.one
        cofactor = (self.order - 1) // n
        for value in range(2, self.order):
            candidate = self.gf(value) ** cofactor
            if self.has_exact_order(candidate, n):
                return candidate
        raise FieldError(f"No primitive {n}-th root of unity in GF({self.order})")

    def matrix(self, values) -> FieldElem:
        """Integer array reduced mod p into a field matrix (prime subfield entries)"""
        return self.gf(np.mod(np.asarray(values, dtype=np.int64), self.params.p))


@lru_cache(maxsize=None)
def get_field(params: FieldParams) -> FiniteField:
    return FiniteField(params)
