import asyncio
from pathlib import Path
from typing import List, Sequence

import sympy

from src.chevalley import get_engine
from src.config import settings
from src.errors import InvalidInputError
from src.logger import logger
from src.verification.checks import (
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
)
from src.verification.models import CheckReport, CheckResult, EngineInfo, summarize
from src.verification.theorem import require_odd_prime_power


def require_odd_prime(p: int):
    if p == 2 or not sympy.isprime(p):
        raise InvalidInputError(f"p must be an odd prime, got {p}")


def engine_info(p: int) -> EngineInfo:
    engine = get_engine(p)
    params = engine.field.params
    return EngineInfo(
        p=params.p,
        k=params.k,
        modulus_poly=params.modulus_poly,
        sign_convention_id=engine.basis.sign_convention_id,
    )


def _matrix_checks(p: int) -> List[CheckResult]:
    # one engine shared by all three, so they run in sequence
    return [check_engine(p), check_construction(p), check_involution_census(p)]


async def run_report(p: int, qs: Sequence[int]) -> CheckReport:
    """Every check for the prime p and the prime powers qs, in a fixed order"""
    require_odd_prime(p)
    for q in qs:
        require_odd_prime_power(q)
    qs = list(qs)

    logger.info(f"Running checks for p = {p}, q in {qs}")
    info = await asyncio.to_thread(engine_info, p)

    lattice_jobs = [
        asyncio.to_thread(check_simply_connected),
        *[asyncio.to_thread(check_lemma_derived_membership, q) for q in qs],
        *[asyncio.to_thread(check_theorem, q) for q in qs],
        *[asyncio.to_thread(check_sigma_structure, q) for q in qs],
        asyncio.to_thread(check_theorem_sweep, settings.theorem_sweep_limit),
        asyncio.to_thread(check_h1_and_table1),
        asyncio.to_thread(check_survey),
    ]
    matrix_results, *lattice_results = await asyncio.gather(
        asyncio.to_thread(_matrix_checks, p),
        *lattice_jobs,
    )

    checks = list(matrix_results) + list(lattice_results)
    report = CheckReport(engine=info, qs=qs, checks=checks, summary=summarize(checks))
    logger.info(f"Report: {report.summary}")
    return report


def write_report(report: CheckReport, path: str) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(report.model_dump_json(indent=2), encoding="utf-8")
    logger.info(f"Report saved: {target}")
    return target


def read_report(path: str) -> CheckReport:
    return CheckReport.model_validate_json(Path(path).read_text(encoding="utf-8"))
