from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .numeric import GQ
from .operator_models import BasisAddress

SCHEMA_VERSION = "1"


class CompletionTarget(str, Enum):
    FLI = "fli"
    FRI = "fri"
    INVERTIBLE = "inv"


class CompletionCase(str, Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    NONE = "none"


class VerdictOutcome(str, Enum):
    EXACT = "exact"
    SAMPLED_PASS = "sampled_pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    NOT_APPLICABLE = "not_applicable"


class GapEvidence(str, Enum):
    STABLE_GAP = "stable_gap"
    SHRINKING_GAP = "shrinking_gap"
    INCONCLUSIVE = "inconclusive"


ROUND_ROBIN_DIAGONAL = "round_robin_diagonal"


class CompletionCertificate(BaseModel):
    """Corner C = Σ |cokernel(A) address⟩⟨kernel(B) address| at one λ.

    Pairs are (kernel-of-B address, cokernel-of-A address). In the infinite
    case ``pairs`` is a preview and ``rule`` regenerates the full bijection.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    target: CompletionTarget
    at_lambda: GQ
    case: CompletionCase
    k: Optional[int] = None
    pairs: Tuple[Tuple[BasisAddress, BasisAddress], ...] = ()
    rule: Optional[str] = None

    @property
    def is_zero(self) -> bool:
        return self.case == CompletionCase.FINITE and self.k == 0

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "target": self.target.value,
            "lambda": self.at_lambda.to_json(),
            "case": self.case.value,
            "pairs": [[src.to_json(), dst.to_json()] for src, dst in self.pairs],
        }
        if self.k is not None:
            data["k"] = self.k
        if self.rule is not None:
            data["rule"] = self.rule
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "CompletionCertificate":
        return cls(
            target=CompletionTarget(data["target"]),
            at_lambda=GQ.from_json(data["lambda"]),
            case=CompletionCase(data["case"]),
            k=data.get("k"),
            pairs=tuple((BasisAddress.from_json(s), BasisAddress.from_json(d))
                        for s, d in data.get("pairs", [])),
            rule=data.get("rule"),
        )


class CompletionReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    target: CompletionTarget
    at_lambda: GQ
    decision: bool
    failed_conditions: List[str]  # subset of a, b, c
    case: CompletionCase = CompletionCase.NONE
    certificate: Optional[CompletionCertificate] = None
    point_data_a: Dict[str, Any] = Field(default_factory=dict)
    point_data_b: Dict[str, Any] = Field(default_factory=dict)
    explanation: str = ""
    calculation_steps: List[str] = Field(default_factory=list)

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "target": self.target.value,
            "lambda": self.at_lambda.to_json(),
            "decision": "yes" if self.decision else "no",
            "failed_conditions": self.failed_conditions,
            "case": self.case.value,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "point_data": {"a": self.point_data_a, "b": self.point_data_b},
            "explanation": self.explanation,
            "calculation_steps": self.calculation_steps,
        }


class Verdict(BaseModel):
    check: str
    outcome: VerdictOutcome
    hypothesis_holds: Optional[bool] = None
    samples: int = 0
    explanation: str
    calculation_steps: List[str] = Field(default_factory=list)
    schema_version: str = Field(default=SCHEMA_VERSION, serialization_alias="schema")

    @property
    def passed(self) -> bool:
        return self.outcome in (VerdictOutcome.EXACT, VerdictOutcome.SAMPLED_PASS)

    def to_json(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)


class VerificationOverview(BaseModel):
    target: CompletionTarget
    verdicts: List[Verdict]
    schema_version: str = Field(default=SCHEMA_VERSION, serialization_alias="schema")

    @property
    def all_passed(self) -> bool:
        return all(v.passed or v.outcome == VerdictOutcome.NOT_APPLICABLE for v in self.verdicts)

    def to_json(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)


class SizeDiagnostics(BaseModel):
    n: int
    dimension: int
    small_singular_values: List[float]
    adjoint_small_singular_values: List[float]
    edge_mass: List[float]  # per candidate null direction
    adjoint_edge_mass: List[float]
    alpha_count: int
    beta_count: int
    gap: Optional[float] = None  # smallest singular value above the near-null cluster


class NumericPointData(BaseModel):
    alpha_est: int
    beta_est: int
    closed_evidence: GapEvidence
    # capped: the count reached a cut-down infinite multiplicity
    # unbounded: the count kept growing when the cut was raised, read as ∞
    alpha_capped: bool = False
    beta_capped: bool = False
    alpha_unbounded: bool = False
    beta_unbounded: bool = False
    per_size: List[SizeDiagnostics]
    schema_version: str = Field(default=SCHEMA_VERSION, serialization_alias="schema")

    @property
    def capped(self) -> bool:
        return self.alpha_capped or self.beta_capped

    def to_json(self) -> Dict[str, Any]:
        data = self.model_dump(mode="json", by_alias=True)
        data["capped"] = self.capped
        return data


# ---------------------------------------------------------------- requests


class ClassifyRequest(BaseModel):
    op: str
    lambda_: str = Field(alias="lambda")
    kind: Optional[str] = None


class SpectrumRequest(BaseModel):
    op: str
    kind: str


class CompleteRequest(BaseModel):
    a: str
    b: str
    lambda_: str = Field(alias="lambda")
    target: CompletionTarget = CompletionTarget.FLI


class VerifyRequest(BaseModel):
    check: str
    a: str
    b: Optional[str] = None
    c: Optional[Dict[str, Any]] = None  # certificate JSON; omitted means C = 0
    target: CompletionTarget = CompletionTarget.FLI
    samples: Optional[int] = None
    seed: Optional[int] = None
    lambda_: Optional[str] = Field(default=None, alias="lambda")  # harte and falsify only
    literal: Optional[bool] = None


class VerifyAllRequest(BaseModel):
    a: str
    b: str
    target: CompletionTarget = CompletionTarget.FLI
    samples: Optional[int] = None
    seed: Optional[int] = None


class OracleRequest(BaseModel):
    op: str
    lambda_: str = Field(alias="lambda")
    sizes: Optional[List[int]] = None
    tol: Optional[float] = None
