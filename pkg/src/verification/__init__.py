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
    verification_check,
)
from src.verification.models import (
    CheckReport,
    CheckResult,
    CheckStatus,
    EngineInfo,
    SigmaStructure,
    TheoremDecision,
    summarize,
)
from src.verification.report import read_report, require_odd_prime, run_report, write_report
from src.verification.theorem import (
    closed_form_outer_part,
    derived_membership,
    epsilon,
    is_odd_prime_power,
    odd_prime_powers,
    prop_sigma_structure,
    require_odd_prime_power,
    sigma_action_element,
    theorem_decision,
    theorem_sweep,
)

__all__ = [
    "CheckReport",
    "CheckResult",
    "CheckStatus",
    "EngineInfo",
    "SigmaStructure",
    "TheoremDecision",
    "check_construction",
    "check_engine",
    "check_h1_and_table1",
    "check_involution_census",
    "check_lemma_derived_membership",
    "check_sigma_structure",
    "check_simply_connected",
    "check_survey",
    "check_theorem",
    "check_theorem_sweep",
    "closed_form_outer_part",
    "derived_membership",
    "epsilon",
    "is_odd_prime_power",
    "odd_prime_powers",
    "verification_check",
    "prop_sigma_structure",
    "read_report",
    "require_odd_prime",
    "require_odd_prime_power",
    "run_report",
    "sigma_action_element",
    "summarize",
    "theorem_decision",
    "theorem_sweep",
]
