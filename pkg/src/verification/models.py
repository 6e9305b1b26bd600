from enum import Enum
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, Field


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class CheckResult(BaseModel):
    name: str
    status: CheckStatus
    paper_anchor: str = ""
    details: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS


class EngineInfo(BaseModel):
    p: int
    k: int
    modulus_poly: Tuple[int, ...]
    sign_convention_id: str


class CheckReport(BaseModel):
    engine: EngineInfo
    qs: List[int]
    checks: List[CheckResult]
    summary: Dict[str, int]

    @property
    def all_passed(self) -> bool:
        return all(c.status != CheckStatus.FAIL for c in self.checks)

    def failing(self) -> List[str]:
        return [c.name for c in self.checks if c.status == CheckStatus.FAIL]


class TheoremDecision(BaseModel):
    """Outer part of N_G'(E) for one q, decided twice"""

    q: int
    epsilon: int
    y_in_derived: bool
    outer_part: str
    closed_form: str
    agrees: bool

    @property
    def structure(self) -> str:
        return f"C.{self.outer_part}"


class SigmaStructure(BaseModel):
    q: int
    epsilon: int
    subgroup: str
    sigma_action: str
    centralizer: str
    quotient: str
    centralizer_in_derived: bool


def summarize(checks: List[CheckResult]) -> Dict[str, int]:
    summary = {status.value: 0 for status in CheckStatus}
    for check in checks:
        summary[check.status.value] += 1
    summary["total"] = len(checks)
    return summary
