import numpy as np
import pytest
from pydantic import ValidationError

from src.errors import ModulusMismatchError, NotAUnitError, NotSigmaStableError
from src.groupelems import e_element, f_square_element, g_element
from src.lattices import (
    FrobeniusSpec,
    IsogenyForm,
    TorsionTorusElement,
    cartan_matrix,
    fundamental_group,
    invariant_factors,
    kernel_mod,
    smith_decomposition,
)
from src.rootsystem import standard_a7_base

SC = IsogenyForm.SIMPLY_CONNECTED
ADJ = IsogenyForm.ADJOINT


class TestSmith:
    def test_e7_invariant_factors(self):
        assert invariant_factors(cartan_matrix("E7")) == [1, 1, 1, 1, 1, 1, 2]

    @pytest.mark.parametrize("label, group", [("E7", [2]), ("E6", [3]), ("D4", [2, 2]), ("A3", [4]), ("E8", [])])
    def test_fundamental_groups(self, label, group):
        assert fundamental_group(label) == group

    @pytest.mark.parametrize("label", ["E7", "D4", "A3"])
    def test_decomposition_identity(self, label):
        a = cartan_matrix(label)
        d, u, v = smith_decomposition(a)
        assert np.array_equal(u @ a @ v, d)
        assert np.array_equal(d, np.diag(np.diag(d)))
        assert round(abs(np.linalg.det(u))) == 1
        assert round(abs(np.linalg.det(v))) == 1

    @pytest.mark.parametrize("label", ["E7", "E6", "D4", "D5", "A3"])
    def test_decomposition_matches_sympy_factors(self, label):
        a = cartan_matrix(label)
        d, _, _ = smith_decomposition(a)
        assert [int(x) for x in np.diag(d)] == invariant_factors(a)

    def test_kernel_mod_two(self):
        kernel = kernel_mod(cartan_matrix("E7"), 2)
        assert len(kernel) == 1
        vector, order = kernel[0]
        assert order == 2
        assert tuple(int(x) for x in vector) == (0, 1, 0, 0, 1, 0, 1)

    def test_kernel_vectors_are_killed(self):
        c = cartan_matrix("D4")
        for vector, order in kernel_mod(c, 4):
            assert not np.any((c @ vector) % 4)
            assert order == 2


class TestTorsionElements:
    def test_coefficients_reduced(self):
        a = TorsionTorusElement(modulus=4, coeffs=(5, -1, 0, 0, 0, 0, 0))
        assert a.coeffs == (1, 3, 0, 0, 0, 0, 0)

    def test_arithmetic(self):
        a = TorsionTorusElement(modulus=8, coeffs=(1, 2, 3, 4, 5, 6, 7))
        assert (a + (-a)).is_zero()
        assert (a - a).is_zero()
        assert a.scale(8).is_zero()

    def test_modulus_mismatch(self):
        a = TorsionTorusElement.zero(4)
        b = TorsionTorusElement.zero(8)
        with pytest.raises(ModulusMismatchError):
            a + b

    def test_embed(self):
        a = TorsionTorusElement(modulus=2, coeffs=(0, 1, 0, 0, 1, 0, 1))
        assert a.embed(8).coeffs == (0, 4, 0, 0, 4, 0, 4)
        with pytest.raises(ModulusMismatchError):
            a.embed(3)

    def test_frozen(self):
        a = TorsionTorusElement.zero(2)
        with pytest.raises(ValidationError):
            a.modulus = 4


class TestFrobenius:
    def test_multiplier(self):
        assert FrobeniusSpec(q=3).multiplier(8) == 3
        assert FrobeniusSpec(q=3, twist=-1).multiplier(8) == 5

    def test_bad_twist(self):
        with pytest.raises(ValidationError):
            FrobeniusSpec(q=3, twist=2)

    def test_not_a_unit(self):
        with pytest.raises(NotAUnitError):
            FrobeniusSpec(q=4).multiplier(8)


class TestTorusLattice:
    def test_fundamental_group(self, lattice):
        assert lattice.fundamental_group() == [2]

    def test_h_element_of_simple_roots(self, lattice):
        a1, a2 = lattice.rs.simple_roots[:2]
        h = lattice.h_element([(a1, 3), (a2, 7), (a2, 2)], 8)
        assert h.coeffs == (3, 1, 0, 0, 0, 0, 0)

    def test_frobenius_act(self, lattice):
        e = e_element(lattice)
        assert lattice.frobenius_act(e, FrobeniusSpec(q=3)) == e.scale(3)
        assert lattice.frobenius_act(e, FrobeniusSpec(q=3, twist=-1)) == e.scale(-3)

    def test_central_element(self, lattice):
        z = lattice.central_element_sc()
        assert z.modulus == 2
        assert z.coeffs == (0, 1, 0, 0, 1, 0, 1)
        assert lattice.is_trivial(z, ADJ)
        assert not lattice.is_trivial(z, SC)

    def test_e_orders(self, lattice):
        e = e_element(lattice)
        assert lattice.element_order(e, SC) == 4
        assert lattice.element_order(e, ADJ) == 2
        assert lattice.equal_in_form(e.scale(2), lattice.central_element_sc().embed(8), SC)

    def test_e_and_ez_agree_only_in_adjoint(self, lattice):
        e = e_element(lattice)
        ez = e + lattice.central_element_sc().embed(8)
        assert lattice.equal_in_form(e, ez, ADJ)
        assert not lattice.equal_in_form(e, ez, SC)

    def test_f_square_is_central(self, lattice):
        f2 = f_square_element(lattice)
        assert lattice.equal_in_form(f2, lattice.central_element_sc(), SC)
        assert lattice.is_trivial(f2, ADJ)

    def test_g_orders(self, lattice):
        y = g_element(lattice)
        assert lattice.element_order(y, SC) == 8
        assert lattice.element_order(y, ADJ) == 4

    @pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
    def test_e_derived_membership(self, lattice, q):
        e = e_element(lattice)
        assert lattice.in_derived_subgroup(e, FrobeniusSpec(q=q)) == (q % 4 == 1)
        assert lattice.in_derived_subgroup(e, FrobeniusSpec(q=q, twist=-1)) == (q % 4 == 3)

    def test_unstable_element_rejected(self, lattice):
        with pytest.raises(NotSigmaStableError):
            lattice.in_derived_subgroup(g_element(lattice), FrobeniusSpec(q=3))

    def test_root_pairings_of_e(self, lattice):
        pairings = lattice.root_pairings(e_element(lattice))
        # e acts by -1 on exactly the 70 roots outside the A7 subsystem
        assert set(int(x) for x in pairings) <= {0, 4}
        assert int(np.count_nonzero(pairings)) == 70

    def test_a7_center(self, lattice):
        base = standard_a7_base(lattice.rs)
        assert lattice.subsystem_center(base, 8, ADJ).order == 2
        assert lattice.subsystem_center(base, 8, SC).order == 4

    def test_two_torsion_classes(self, lattice):
        classes = lattice.two_torsion_classes(4)
        assert len(classes) == 128
        assert (0,) * 7 in classes


class TestLatticeInvariants:
    @pytest.mark.parametrize("q, twist", [(3, 1), (5, -1), (7, 1), (9, -1)])
    def test_frobenius_is_additive(self, lattice, q, twist):
        spec = FrobeniusSpec(q=q, twist=twist)
        a = e_element(lattice)
        b = lattice.coroot_element(lattice.rs.highest_root(), 8)
        assert lattice.frobenius_act(a + b, spec) == lattice.frobenius_act(a, spec) + lattice.frobenius_act(b, spec)

    def test_sc_equality_implies_adjoint_equality(self, lattice):
        z = lattice.central_element_sc().embed(8)
        elements = [e_element(lattice), z, e_element(lattice) + z]
        elements += [lattice.coroot_element(r, 8) for r in lattice.rs.positive_roots[::11]]
        for a in elements:
            for b in elements:
                if lattice.equal_in_form(a, b, SC):
                    assert lattice.equal_in_form(a, b, ADJ)

    @pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31])
    def test_derived_membership_depends_on_q_mod_16(self, lattice, q):
        y, e = g_element(lattice), e_element(lattice)
        eps = 1 if q % 4 == 1 else -1
        assert lattice.in_derived_subgroup(y, FrobeniusSpec(q=q, twist=eps)) == lattice.in_derived_subgroup(
            y, FrobeniusSpec(q=q + 16, twist=eps)
        )
        for twist in (1, -1):
            spec, shifted = FrobeniusSpec(q=q, twist=twist), FrobeniusSpec(q=q + 16, twist=twist)
            assert lattice.in_derived_subgroup(e, spec) == lattice.in_derived_subgroup(e, shifted)

    @pytest.mark.parametrize("modulus", [2, 4, 8, 16])
    def test_coroot_orders_divide_modulus(self, lattice, modulus):
        for root in lattice.rs.roots:
            a = lattice.coroot_element(root, modulus)
            for form in (SC, ADJ):
                assert modulus % lattice.element_order(a, form) == 0

    def test_center_of_full_base(self, lattice):
        base = lattice.rs.make_base(lattice.rs.simple_roots)
        assert lattice.subsystem_center(base, 2, SC).order == 2
