import logging
from typing import List, Optional

from ..config import DEFAULT_CONFIG, CalculusConfig
from ..models.operator_models import OperatorExpr
from ..models.report_models import (
    CompletionCertificate, CompletionTarget, Verdict, VerdictOutcome, VerificationOverview,
)
from .theorem_checks import PAIR_CHECKS, run_check

logger = logging.getLogger(__name__)


class VerificationEngine:
    def __init__(self, config: Optional[CalculusConfig] = None):
        self.config = config or DEFAULT_CONFIG

    def run_all(self, a: OperatorExpr, b: OperatorExpr,
                target: CompletionTarget = CompletionTarget.FLI,
                c: Optional[CompletionCertificate] = None,
                samples: Optional[int] = None, seed: Optional[int] = None) -> VerificationOverview:
        """
        Run every pair check; a check that raises becomes an inconclusive verdict
        """
        target = CompletionTarget(target)
        names = PAIR_CHECKS if target != CompletionTarget.INVERTIBLE else ["completion", "block", "delta"]
        verdicts: List[Verdict] = []
        for name in names:
            try:
                verdict = run_check(name, a, b, c=c, target=target, samples=samples, seed=seed,
                                    config=self.config)
            except Exception as e:
                logger.warning("check %s failed to run: %s", name, e)
                verdict = self._create_fallback_verdict(name, str(e))
            verdicts.append(verdict)
        # duality is a property of each operator on its own
        for label, expr in (("A", a), ("B", b)):
            try:
                verdict = run_check("duality", expr, samples=samples, seed=seed, config=self.config)
                verdicts.append(verdict.model_copy(update={"check": f"duality({label})"}))
            except Exception as e:
                logger.warning("duality check for %s failed to run: %s", label, e)
                verdicts.append(self._create_fallback_verdict(f"duality({label})", str(e)))
        return VerificationOverview(target=target, verdicts=verdicts)

    def _create_fallback_verdict(self, check: str, reason: str) -> Verdict:
        return Verdict(
            check=check,
            outcome=VerdictOutcome.INCONCLUSIVE,
            explanation=f"Check could not be completed: {reason}",
            calculation_steps=["Error in verification"],
        )
