from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel

from src.chevalley import AdjointEngine, AdjointMatrix
from src.config import load_reference_values
from src.errors import EngineError, InvalidInputError
from src.groupelems.elements import E_MODULUS, cumulative_terms, e_element
from src.lattices import IsogenyForm, TorusLattice
from src.logger import logger
from src.rootsystem import Root, standard_a7_base


class InvolutionClassLabel(str, Enum):
    A7 = "A7"
    D6A1 = "D6A1"
    E6T1 = "E6T1"


def involution_class(engine: AdjointEngine, m: AdjointMatrix) -> InvolutionClassLabel:
    """Class of an involution of the adjoint group, read off its fixed space on Lie(G)"""
    if engine.is_identity(m) or not engine.is_identity(m @ m):
        raise InvalidInputError("Matrix is not an involution")
    dim = engine.fixed_space_dim(m)
    try:
        return InvolutionClassLabel(load_reference_values().label_for_dimension(dim))
    except KeyError:
        raise EngineError(f"Involution with fixed dimension {dim} matches no known class")


def recognise_root_element(engine: AdjointEngine, m: AdjointMatrix) -> Tuple[Root, int]:
    """(beta, s) with m = x_beta(s), s = +-1.

    M - 1 touches the Cartan columns only in the e_beta row, where the
    entry in column h_i is -s <beta, alpha_i^vee>.
    """
    rs = engine.rs
    n = engine.basis.n_roots
    diff = m - engine.identity()
    rows = np.nonzero(np.any(diff[:, n:].view(np.ndarray) != 0, axis=1))[0]
    if len(rows) != 1 or rows[0] >= n:
        raise EngineError("Matrix is not a root element")

    r = int(rows[0])
    beta = rs.roots[r]
    pairings = [rs.pairing(beta, a) for a in rs.simple_roots]
    i = next(j for j, value in enumerate(pairings) if value)
    s = diff[r, n + i] * engine.field.invert(-pairings[i])
    if not engine.equal(m, engine.x_matrix(beta, s)):
        raise EngineError(f"Matrix is not of the form x_{beta}(t)")

    if engine.field.equal(s, 1):
        return beta, 1
    if engine.field.equal(s, -1):
        return beta, -1
    raise EngineError(f"Root element x_{beta}(t) has t = {int(s)}, not a sign")


def root_conjugation_map(engine: AdjointEngine, f_matrix: AdjointMatrix) -> Dict[Root, Tuple[Root, int]]:
    """alpha -> (beta, s) with f x_alpha(1) f^-1 = x_beta(s)"""
    f_inverse = engine.inverse(f_matrix)
    images = {}
    for alpha in engine.rs.roots:
        conjugate = f_matrix @ engine.x_matrix(alpha, 1) @ f_inverse
        images[alpha] = recognise_root_element(engine, conjugate)
    return images


class CensusReport(BaseModel):
    modulus: int
    class_count: int
    total: int
    counts: Dict[str, int]
    labels: Dict[str, str]
    lift_orders: Dict[str, List[int]]


def torus_involution_census(engine: AdjointEngine, lattice: TorusLattice, modulus: int = 4) -> CensusReport:
    """Fixed dimensions over every nontrivial adjoint 2-torsion class of the torus.

    Classes come from coroot vectors mod 4 whose double is adjoint-trivial,
    deduplicated by adjoint equality.
    """
    classes = lattice.two_torsion_classes(modulus)
    expected = 2 ** lattice.rank
    if len(classes) != expected:
        raise EngineError(f"Found {len(classes)} adjoint 2-torsion classes, expected {expected}")

    counts: Dict[str, int] = {}
    labels: Dict[str, str] = {}
    lift_orders: Dict[str, set] = {}
    for key in sorted(classes):
        if not any(key):
            continue
        element = classes[key]
        matrix = engine.torsion_to_matrix(element)
        label = involution_class(engine, matrix)
        dim = str(engine.fixed_space_dim(matrix))
        counts[dim] = counts.get(dim, 0) + 1
        labels[dim] = label.value
        lift_orders.setdefault(dim, set()).add(lattice.element_order(element, IsogenyForm.SIMPLY_CONNECTED))

    total = sum(counts.values())
    logger.info(f"Involution census: {total} classes, counts {counts}")
    return CensusReport(
        modulus=modulus,
        class_count=len(classes),
        total=total,
        counts=dict(sorted(counts.items())),
        labels=dict(sorted(labels.items())),
        lift_orders={dim: sorted(orders) for dim, orders in sorted(lift_orders.items())},
    )


class SurveyCase(BaseModel):
    a: int
    lam: str
    det_one: bool
    excluded: Optional[str] = None
    adjoint_order_f: Optional[int] = None
    adjoint_order_ef: Optional[int] = None
    sc_order_f: Optional[int] = None
    sc_order_ef: Optional[int] = None
    lifts_to_involution: Optional[bool] = None


class SurveyReport(BaseModel):
    cases: List[SurveyCase]
    admissible: int
    contradiction_reproduced: bool


def a7_involution_survey(lattice: TorusLattice) -> SurveyReport:
    """Images f' of diag(lam I_a, -lam I_(8-a)) in the A7 torus, lam in {zeta, 1}.

    In every admissible case one of f', e f' lifts to an element of order <= 2
    in the simply connected group.
    """
    base = standard_a7_base(lattice.rs)
    e = e_element(lattice)
    sc, adj = IsogenyForm.SIMPLY_CONNECTED, IsogenyForm.ADJOINT

    cases = []
    for lam, k in (("zeta", 1), ("1", 0)):
        for a in range(9):
            exponents = [k] * a + [k + 4] * (8 - a)
            if sum(exponents) % E_MODULUS:
                cases.append(SurveyCase(a=a, lam=lam, det_one=False, excluded="determinant"))
                continue

            f_prime = lattice.h_element(cumulative_terms(base, exponents, E_MODULUS), E_MODULUS)
            if lattice.is_trivial(f_prime, adj):
                cases.append(SurveyCase(a=a, lam=lam, det_one=True, excluded="trivial"))
                continue
            if lattice.equal_in_form(f_prime, e, adj):
                cases.append(SurveyCase(a=a, lam=lam, det_one=True, excluded="equals e"))
                continue

            ef_prime = e + f_prime
            sc_f = lattice.element_order(f_prime, sc)
            sc_ef = lattice.element_order(ef_prime, sc)
            cases.append(SurveyCase(
                a=a,
                lam=lam,
                det_one=True,
                adjoint_order_f=lattice.element_order(f_prime, adj),
                adjoint_order_ef=lattice.element_order(ef_prime, adj),
                sc_order_f=sc_f,
                sc_order_ef=sc_ef,
                lifts_to_involution=min(sc_f, sc_ef) <= 2,
            ))

    admissible = [c for c in cases if c.excluded is None]
    return SurveyReport(
        cases=cases,
        admissible=len(admissible),
        contradiction_reproduced=bool(admissible) and all(c.lifts_to_involution for c in admissible),
    )
