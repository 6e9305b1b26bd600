from typing import List, Optional, Sequence, Tuple

from src.chevalley import AdjointEngine
from src.config import load_reference_values
from src.errors import EngineError, InvalidInputError
from src.groupelems.words import GroupWord, h_gen, w_gen, word
from src.lattices import TorsionTorusElement, TorusLattice
from src.rootsystem import Root, RootSystem, SubsystemBase, build_root_system, standard_a7_base

E_MODULUS = 8
G_MODULUS = 16

# diag(s, ..., s, -s) with s = zeta_16 and -s = zeta_16^9
G_EXPONENTS = (1, 1, 1, 1, 1, 1, 1, 9)


def cumulative_terms(base: SubsystemBase, exponents: Sequence[int], modulus: int) -> List[Tuple[Root, int]]:
    """diag(zeta^k_1, ..., zeta^k_n+1) in SL_n+1 as prod_i h_{beta_i}(zeta^(k_1 + ... + k_i))"""
    if len(exponents) != len(base) + 1:
        raise InvalidInputError(f"Expected {len(base) + 1} diagonal exponents, got {len(exponents)}")
    if sum(exponents) % modulus:
        raise InvalidInputError("Diagonal matrix does not have determinant 1")
    terms = []
    running = 0
    for root, k in zip(base, exponents):
        running += k
        terms.append((root, running % modulus))
    return terms


def construct_e(engine: AdjointEngine) -> GroupWord:
    """e = h_{-alpha_0}(zeta) h_{alpha_1}(zeta^2) h_{alpha_3}(zeta^3) ... h_{alpha_7}(zeta^7)"""
    zeta = engine.root_of_unity(E_MODULUS)
    base = standard_a7_base(engine.rs)
    return word([h_gen(root, zeta ** i) for i, root in enumerate(base, start=1)])


def reduced_e(engine: AdjointEngine) -> GroupWord:
    """h_{alpha_2}(-zeta^2) h_{alpha_5}(zeta^2) h_{alpha_7}(-zeta^2) h_{alpha_6}(-1)"""
    zeta2 = engine.root_of_unity(E_MODULUS) ** 2
    minus_one = -engine.field.one
    rs = engine.rs
    return word([
        h_gen(rs.simple_root(2), -zeta2),
        h_gen(rs.simple_root(5), zeta2),
        h_gen(rs.simple_root(7), -zeta2),
        h_gen(rs.simple_root(6), minus_one),
    ])


def f_roots(rs: RootSystem) -> List[Root]:
    return [rs.root_by_coeffs(c) for c in load_reference_values().f_word_roots]


def construct_f(rs: Optional[RootSystem] = None) -> GroupWord:
    """Product of w_gamma(1) over seven pairwise orthogonal roots"""
    rs = rs or build_root_system("E7")
    return word([w_gen(root) for root in f_roots(rs)])


def construct_g(engine: AdjointEngine) -> GroupWord:
    """h-word over the A7 base realising diag(s, ..., s, -s), s a primitive 16th root of unity"""
    s = engine.root_of_unity(G_MODULUS)
    diagonal = [s] * 7 + [-s]
    determinant = engine.field.one
    for entry in diagonal:
        determinant = determinant * entry
    if not engine.field.equal(determinant, 1):
        raise EngineError("diag(s, ..., s, -s) does not have determinant 1")

    terms = cumulative_terms(standard_a7_base(engine.rs), G_EXPONENTS, G_MODULUS)
    return word([h_gen(root, s ** k) for root, k in terms])


# Lattice images
def e_element(lattice: TorusLattice) -> TorsionTorusElement:
    base = standard_a7_base(lattice.rs)
    return lattice.h_element([(root, i) for i, root in enumerate(base, start=1)], E_MODULUS)


def reduced_e_element(lattice: TorusLattice) -> TorsionTorusElement:
    # -zeta^2 = zeta^6 and -1 = zeta^4 for zeta of order 8
    rs = lattice.rs
    terms = [(rs.simple_root(2), 6), (rs.simple_root(5), 2), (rs.simple_root(7), 6), (rs.simple_root(6), 4)]
    return lattice.h_element(terms, E_MODULUS)


def f_square_element(lattice: TorusLattice) -> TorsionTorusElement:
    """f^2 = prod h_gamma(-1) over the roots of the f-word"""
    return lattice.h_element([(root, 1) for root in f_roots(lattice.rs)], 2)


def g_element(lattice: TorusLattice) -> TorsionTorusElement:
    return lattice.h_element(cumulative_terms(standard_a7_base(lattice.rs), G_EXPONENTS, G_MODULUS), G_MODULUS)
