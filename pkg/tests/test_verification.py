import asyncio

import pytest

from src.config import settings
from src.errors import InvalidInputError
from src.verification import (
    CheckReport,
    CheckResult,
    CheckStatus,
    EngineInfo,
    check_construction,
    check_engine,
    check_h1_and_table1,
    check_involution_census,
    check_lemma_derived_membership,
    check_sigma_structure,
    check_simply_connected,
    check_survey,
    check_theorem,
    check_theorem_sweep,
    derived_membership,
    is_odd_prime_power,
    odd_prime_powers,
    verification_check,
    prop_sigma_structure,
    read_report,
    run_report,
    sigma_action_element,
    summarize,
    theorem_decision,
    theorem_sweep,
    write_report,
)


class TestTheorem:
    @pytest.mark.parametrize("q, outer", [(3, "3"), (5, "3"), (7, "Sym3"), (9, "Sym3"), (17, "Sym3"), (23, "Sym3"), (25, "Sym3")])
    def test_spot_rows(self, q, outer):
        decision = theorem_decision(q)
        assert decision.outer_part == outer
        assert decision.agrees
        assert decision.structure == f"C.{outer}"

    def test_epsilon(self):
        assert theorem_decision(3).epsilon == -1
        assert theorem_decision(13).epsilon == 1

    def test_sweep_agrees_below_1000(self):
        decisions = theorem_sweep(1000)
        assert len(decisions) == len(odd_prime_powers(1000))
        assert all(d.agrees for d in decisions)

    def test_prime_powers(self):
        assert odd_prime_powers(30) == [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29]
        assert is_odd_prime_power(243)
        assert not is_odd_prime_power(15)
        assert not is_odd_prime_power(1)

    def test_even_q(self):
        with pytest.raises(InvalidInputError, match="q must be odd"):
            theorem_decision(4)

    def test_not_a_prime_power(self):
        with pytest.raises(InvalidInputError):
            theorem_decision(21)

    @pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
    def test_derived_membership(self, q):
        assert derived_membership(q) == (q % 4 == 1, q % 4 == 3)

    def test_sigma_action(self):
        assert sigma_action_element(5) == "1"
        assert sigma_action_element(3) == "f"

    def test_sigma_structure(self):
        structure = prop_sigma_structure(3)
        assert structure.subgroup == "E~"
        assert structure.sigma_action == "trivial"
        assert structure.centralizer == "E x Inndiag(D4(q))"
        assert structure.centralizer_in_derived
        assert prop_sigma_structure(9).subgroup == "E"


class TestCheckWrapper:
    def test_exception_becomes_failure(self):
        @verification_check("broken[n={n}]", "anchor")
        def broken(n: int):
            raise InvalidInputError("bad input")

        result = broken(3)
        assert result.name == "broken[n=3]"
        assert result.status == CheckStatus.FAIL
        assert "bad input" in result.details["error"]

    def test_failed_assertion(self):
        @verification_check("partial", "anchor")
        def partial():
            return {"one": True, "two": False}, {"value": 1}

        result = partial()
        assert result.status == CheckStatus.FAIL
        assert result.details["assertions"] == {"one": True, "two": False}
        assert result.details["value"] == 1


class TestLatticeChecks:
    def test_simply_connected(self):
        result = check_simply_connected()
        assert result.passed, result.details
        assert result.details["y_sc_order"] == 8

    @pytest.mark.parametrize("q", [3, 5, 9])
    def test_lemma(self, q):
        assert check_lemma_derived_membership(q).passed

    @pytest.mark.parametrize("q", [3, 7, 25])
    def test_theorem_and_sigma(self, q):
        assert check_theorem(q).passed
        assert check_sigma_structure(q).passed

    def test_sweep(self):
        assert check_theorem_sweep(200).passed

    def test_h1_and_table1(self):
        result = check_h1_and_table1()
        assert result.passed, result.details["assertions"]
        assert result.details["g_image"] == "f:(f,ef)"

    def test_survey(self):
        assert check_survey().passed


class TestMatrixChecks:
    def test_engine(self, monkeypatch):
        monkeypatch.setattr(settings, "jacobi_samples", 50)
        monkeypatch.setattr(settings, "h_agreement_samples", 10)
        monkeypatch.setattr(settings, "commutator_samples", 20)
        result = check_engine(17)
        assert result.passed, result.details

    def test_construction(self):
        result = check_construction(17)
        assert result.passed, result.details["assertions"]
        assert result.details["fixed_dims"] == {"e": 63, "f": 63, "ef": 63}
        assert result.details["common_fixed_dim"] == 28
        assert result.details["root_sign_map"]["plus"] == 0
        assert result.details["assertions"]["f_sign_map_all_minus"]

    def test_census(self):
        assert check_involution_census(17).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("p, k", [(3, 4), (5, 4), (7, 2)])
    def test_construction_other_primes(self, p, k):
        result = check_construction(p)
        assert result.passed, result.details
        assert result.details["field"] == {"p": p, "k": k}


class TestReport:
    def test_round_trip(self, tmp_path):
        checks = [
            CheckResult(name="a", status=CheckStatus.PASS, paper_anchor="x", details={"dims": [63, 69], "nested": {"k": True}}),
            CheckResult(name="b", status=CheckStatus.FAIL, details={"error": "boom"}),
        ]
        report = CheckReport(
            engine=EngineInfo(p=17, k=1, modulus_poly=(1, 0), sign_convention_id="id"),
            qs=[3],
            checks=checks,
            summary=summarize(checks),
        )
        assert report.summary == {"pass": 1, "fail": 1, "skipped": 0, "total": 2}
        assert not report.all_passed
        assert report.failing() == ["b"]
        path = write_report(report, str(tmp_path / "out" / "report.json"))
        assert read_report(str(path)) == report

    def test_even_prime_rejected(self):
        with pytest.raises(InvalidInputError):
            asyncio.run(run_report(2, [3]))

    def test_even_q_rejected(self):
        with pytest.raises(InvalidInputError):
            asyncio.run(run_report(17, [4]))

    @pytest.mark.slow
    def test_full_report_is_deterministic(self, monkeypatch):
        monkeypatch.setattr(settings, "jacobi_samples", 50)
        monkeypatch.setattr(settings, "h_agreement_samples", 10)
        monkeypatch.setattr(settings, "commutator_samples", 20)
        first = asyncio.run(run_report(17, [3, 5]))
        second = asyncio.run(run_report(17, [3, 5]))
        assert first.all_passed, first.failing()
        assert first.model_dump_json() == second.model_dump_json()
        assert [c.name for c in first.checks][:3] == ["engine_self_test[p=17]", "construction[p=17]", "involution_census[p=17]"]
