"""Decisions about q: derived-subgroup membership of e and y' and the outer part of N_G'(E).

Everything here runs in the lattice engine, where q only matters mod 16.
"""

from typing import List, Optional, Tuple

import sympy

from src.errors import InvalidInputError
from src.groupelems import e_element, g_element
from src.lattices import FrobeniusSpec, TorusLattice, get_lattice
from src.logger import logger
from src.verification.models import SigmaStructure, TheoremDecision


def is_odd_prime_power(q: int) -> bool:
    return q > 1 and q % 2 == 1 and len(sympy.primefactors(q)) == 1


def require_odd_prime_power(q: int):
    if q % 2 == 0:
        raise InvalidInputError("q must be odd")
    if not is_odd_prime_power(q):
        raise InvalidInputError(f"q = {q} is not a prime power")


def odd_prime_powers(limit: int) -> List[int]:
    return [q for q in range(3, limit, 2) if is_odd_prime_power(q)]


def epsilon(q: int) -> int:
    """The sign with q = epsilon mod 4"""
    return 1 if q % 4 == 1 else -1


def derived_membership(q: int, lattice: Optional[TorusLattice] = None) -> Tuple[bool, bool]:
    """(E in G', E~ in G') for the untwisted and twisted Frobenius"""
    require_odd_prime_power(q)
    lattice = lattice or get_lattice()
    e = e_element(lattice)
    untwisted = lattice.in_derived_subgroup(e, FrobeniusSpec(q=q, twist=1))
    twisted = lattice.in_derived_subgroup(e, FrobeniusSpec(q=q, twist=-1))
    return untwisted, twisted


def closed_form_outer_part(q: int) -> str:
    return "Sym3" if q % 8 in (1, 7) else "3"


def theorem_decision(q: int, lattice: Optional[TorusLattice] = None) -> TheoremDecision:
    """Sym3 on top of C exactly when the g-lift y' is sigma-fixed in G_sc"""
    require_odd_prime_power(q)
    lattice = lattice or get_lattice()
    eps = epsilon(q)
    y_in_derived = lattice.in_derived_subgroup(g_element(lattice), FrobeniusSpec(q=q, twist=eps))
    outer = "Sym3" if y_in_derived else "3"
    closed = closed_form_outer_part(q)
    if outer != closed:
        logger.error(f"q = {q}: lattice gives C.{outer}, congruence gives C.{closed}")
    return TheoremDecision(
        q=q,
        epsilon=eps,
        y_in_derived=y_in_derived,
        outer_part=outer,
        closed_form=closed,
        agrees=outer == closed,
    )


def theorem_sweep(limit: int, lattice: Optional[TorusLattice] = None) -> List[TheoremDecision]:
    lattice = lattice or get_lattice()
    decisions = [theorem_decision(q, lattice) for q in odd_prime_powers(limit)]
    logger.info(f"Theorem sweep below {limit}: {len(decisions)} prime powers, "
                f"{sum(not d.agrees for d in decisions)} disagreements")
    return decisions


def sigma_action_element(q: int, lattice: Optional[TorusLattice] = None) -> str:
    """Element of E by which sigma acts on Sym_4: "1" when E lies in G', otherwise "f\""""
    untwisted, _ = derived_membership(q, lattice)
    return "1" if untwisted else "f"


def prop_sigma_structure(q: int, lattice: Optional[TorusLattice] = None) -> SigmaStructure:
    require_odd_prime_power(q)
    lattice = lattice or get_lattice()
    eps = epsilon(q)
    in_derived = lattice.in_derived_subgroup(e_element(lattice), FrobeniusSpec(q=q, twist=eps))
    return SigmaStructure(
        q=q,
        epsilon=eps,
        subgroup="E" if eps == 1 else "E~",
        sigma_action="trivial",
        centralizer="E x Inndiag(D4(q))",
        quotient="Sym3",
        centralizer_in_derived=in_derived,
    )
