import pytest

from src.config import load_reference_values
from src.errors import InvalidInputError, ParameterError
from src.groupelems import (
    InvolutionClassLabel,
    a7_involution_survey,
    construct_e,
    construct_f,
    construct_g,
    cumulative_terms,
    e_element,
    evaluate,
    f_roots,
    h_gen,
    h_word_image,
    involution_class,
    reduced_e,
    root_conjugation_map,
    torus_involution_census,
    w_gen,
    word,
)
from src.rootsystem import standard_a7_base


@pytest.fixture(scope="module")
def elements(engine17):
    e = evaluate(construct_e(engine17), engine17)
    f = evaluate(construct_f(engine17.rs), engine17)
    g = evaluate(construct_g(engine17), engine17)
    return e, f, g


class TestWords:
    def test_empty_word(self, engine17):
        assert engine17.is_identity(evaluate(word([]), engine17))
        assert str(word([])) == "1"

    def test_inverse_pair(self, engine17, rs):
        t = engine17.scalar(5)
        w = word([h_gen(rs.simple_root(3), t), h_gen(rs.simple_root(3), t ** -1)])
        assert engine17.is_identity(evaluate(w, engine17))

    def test_evaluate_is_multiplicative(self, engine17, rng):
        full = construct_f(engine17.rs) + construct_e(engine17)
        left, right = full.split(rng.randrange(1, len(full)))
        assert engine17.equal(evaluate(full, engine17), evaluate(left, engine17) @ evaluate(right, engine17))

    def test_zero_parameter_rejected(self, engine17, rs):
        with pytest.raises(ParameterError):
            h_gen(rs.simple_root(1), engine17.field.zero)

    def test_token_text(self, rs):
        assert str(w_gen(rs.simple_root(1))) == "w_1000000(1)"

    @pytest.mark.parametrize("m", [2, 4, 8, 16])
    def test_h_words_match_lattice(self, engine17, lattice, rs, rng, m):
        zeta = engine17.root_of_unity(m)
        tokens = [h_gen(rng.choice(rs.roots), zeta ** rng.randrange(m)) for _ in range(6)]
        w = word(tokens)
        image = h_word_image(w, engine17, lattice, m)
        assert engine17.equal(evaluate(w, engine17), engine17.torsion_to_matrix(image))

    def test_h_word_image_needs_h_tokens(self, engine17, lattice):
        with pytest.raises(InvalidInputError):
            h_word_image(construct_f(engine17.rs), engine17, lattice, 2)

    def test_cumulative_terms_needs_determinant_one(self, rs):
        with pytest.raises(InvalidInputError):
            cumulative_terms(standard_a7_base(rs), [1] * 8, 16)
        with pytest.raises(InvalidInputError):
            cumulative_terms(standard_a7_base(rs), [0] * 7, 8)


class TestConstructedElements:
    def test_e_is_an_involution(self, engine17, elements):
        e, _, _ = elements
        assert engine17.is_identity(e @ e)
        assert engine17.equal(e, evaluate(reduced_e(engine17), engine17))
        assert engine17.fixed_space_dim(e) == 63

    def test_e_word_matches_lattice(self, engine17, lattice):
        image = h_word_image(construct_e(engine17), engine17, lattice, 8)
        assert image == e_element(lattice)

    def test_f(self, engine17, rs, elements):
        _, f, _ = elements
        assert len(construct_f(rs)) == 7
        assert rs.pairwise_orthogonal(f_roots(rs))
        assert engine17.is_identity(f @ f)
        assert engine17.fixed_space_dim(f) == 63

    def test_e_and_f_commute(self, engine17, elements):
        e, f, _ = elements
        assert engine17.commutes(e, f)
        assert engine17.commutes(e, engine17.identity())
        assert engine17.common_fixed_space_dim([e, f]) == 28

    def test_g(self, engine17, elements):
        e, f, g = elements
        assert engine17.equal(g @ g, e)
        assert engine17.equal(engine17.conjugate(g, f), e @ f)
        assert engine17.equal(engine17.conjugate(g, e @ f), f)
        assert engine17.equal(engine17.conjugate(g, e), e)

    def test_f_inverts_torus(self, engine17, rs, rng, elements):
        _, f, _ = elements
        for _ in range(5):
            alpha, t = rng.choice(rs.roots), engine17.field.gf(rng.randrange(1, 17))
            assert engine17.equal(engine17.conjugate(f, engine17.h_matrix(alpha, t)), engine17.h_matrix(alpha, t ** -1))

    def test_involution_classes(self, engine17, elements):
        e, f, _ = elements
        for m in (e, f, e @ f):
            assert involution_class(engine17, m) == InvolutionClassLabel.A7

    def test_non_involutions_rejected(self, engine17, elements):
        _, _, g = elements
        with pytest.raises(InvalidInputError):
            involution_class(engine17, engine17.identity())
        with pytest.raises(InvalidInputError):
            involution_class(engine17, g)

    def test_root_conjugation_map(self, engine17, elements):
        _, f, _ = elements
        images = root_conjugation_map(engine17, f)
        assert len(images) == 126
        assert all(beta == -alpha for alpha, (beta, _) in images.items())
        assert all(images[alpha][1] * images[-alpha][1] == 1 for alpha in images)

    def test_f_sign_map_is_all_minus(self, engine17, elements):
        _, f, _ = elements
        signs = [s for _, s in root_conjugation_map(engine17, f).values()]
        assert {1: signs.count(1), -1: signs.count(-1)} == {1: 0, -1: 126}


class TestCensus:
    def test_census(self, engine17, lattice):
        constants = load_reference_values()
        report = torus_involution_census(engine17, lattice)
        assert report.class_count == 128
        assert report.total == 127
        assert report.counts == constants.census_counts
        assert report.labels == {"63": "A7", "69": "D6A1", "79": "E6T1"}
        assert report.lift_orders == {"63": [4], "69": [2], "79": [4]}


@pytest.fixture(scope="module")
def report(lattice):
    return a7_involution_survey(lattice)


class TestSurvey:
    def test_contradiction(self, report):
        assert report.admissible == 6
        assert report.contradiction_reproduced

    def test_exclusions(self, report):
        cases = {(c.lam, c.a): c for c in report.cases}
        assert cases[("1", 8)].excluded == "trivial"
        assert cases[("1", 0)].excluded == "trivial"
        assert cases[("zeta", 0)].excluded == "equals e"
        assert all(cases[(lam, a)].excluded == "determinant" for lam in ("1", "zeta") for a in (1, 3, 5, 7))

    def test_diag_i4(self, report):
        case = next(c for c in report.cases if c.lam == "1" and c.a == 4)
        assert case.sc_order_f == 2

    def test_zeta_cases_lift_through_ef(self, report):
        for case in report.cases:
            if case.lam == "zeta" and case.excluded is None:
                assert case.sc_order_ef <= 2
