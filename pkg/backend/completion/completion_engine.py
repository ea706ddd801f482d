"""Completion decisions for M_C = (A C; 0 B) and witness construction."""
import logging
from dataclasses import dataclass
from itertools import islice
from typing import Dict, Iterator, List, Optional, Tuple, Union

from ..models.numeric import GQ, ExtNat, INF, extnat_add
from ..models.operator_models import BasisAddress, OperatorExpr, PointData
from ..models.report_models import (
    ROUND_ROBIN_DIAGONAL, CompletionCase, CompletionCertificate, CompletionReport,
    CompletionTarget,
)
from ..operators.classifier import fli_conditions, fri_conditions, invertible_conditions
from ..operators.operator_model import adjoint, cokernel_basis, kernel_basis, point_data
from ..utils.errors import PreconditionError

logger = logging.getLogger(__name__)

PREVIEW_PAIRS = 8

CONDITION_TEXT = {
    CompletionTarget.FLI: {
        "a": "A−λ is left invertible",
        "b": "B−λ is lower semi-Fredholm",
        "c": "α(B−λ) ≤ β(A−λ) < ∞ or α(B−λ) = β(A−λ) = ∞",
    },
    CompletionTarget.FRI: {
        "a": "B−λ is right invertible",
        "b": "A−λ is upper semi-Fredholm",
        "c": "β(A−λ) ≤ α(B−λ) < ∞ or α(B−λ) = β(A−λ) = ∞",
    },
    CompletionTarget.INVERTIBLE: {
        "a": "A−λ is left invertible",
        "b": "B−λ is right invertible",
        "c": "α(B−λ) = β(A−λ)",
    },
}


@dataclass(frozen=True)
class BlockMatrixExpr:
    """M_C on H ⊕ K; ``c is None`` is the zero corner."""
    a: OperatorExpr
    b: OperatorExpr
    c: Optional[CompletionCertificate] = None

    @property
    def is_zero(self) -> bool:
        return self.c is None or self.c.is_zero


@dataclass(frozen=True)
class Deferred:
    """Exact point data unavailable; the oracle may be asked instead."""
    reason: str


def certificate_pairs(cert: CompletionCertificate, a: OperatorExpr, b: OperatorExpr,
                      limit: Optional[int] = None) -> Iterator[Tuple[BasisAddress, BasisAddress]]:
    """Pairs of the corner, regenerating the bijection in the infinite case."""
    if cert.case == CompletionCase.FINITE:
        return iter(cert.pairs[:limit] if limit is not None else cert.pairs)
    stream = zip(kernel_basis(b, cert.at_lambda), cokernel_basis(a, cert.at_lambda))
    return stream if limit is None else islice(stream, limit)


def _steps(pa: PointData, pb: PointData, conditions: Dict[str, bool],
           target: CompletionTarget) -> List[str]:
    steps = [
        f"A−λ: α={pa.alpha}, β̄={pa.beta_bar}, β={pa.beta_alg}, closed range={pa.closed}",
        f"B−λ: α={pb.alpha}, β̄={pb.beta_bar}, β={pb.beta_alg}, closed range={pb.closed}",
    ]
    for key in ("a", "b", "c"):
        mark = "holds" if conditions[key] else "fails"
        steps.append(f"({key}) {CONDITION_TEXT[target][key]}: {mark}")
    return steps


def _report(target: CompletionTarget, lam: GQ, pa: PointData, pb: PointData,
            conditions: Dict[str, bool]) -> CompletionReport:
    failed = [k for k in ("a", "b", "c") if not conditions[k]]
    decision = not failed
    if decision:
        explanation = f"{target.value.upper()} completion exists at λ={lam}"
    else:
        explanation = "no completion: " + "; ".join(
            f"({k}) {CONDITION_TEXT[target][k]} fails" for k in failed)
    return CompletionReport(
        target=target, at_lambda=lam, decision=decision, failed_conditions=failed,
        point_data_a=pa.to_json(), point_data_b=pb.to_json(),
        explanation=explanation, calculation_steps=_steps(pa, pb, conditions, target),
    )


def _pairing(a: OperatorExpr, b: OperatorExpr, lam: GQ, k: ExtNat,
             target: CompletionTarget) -> CompletionCertificate:
    """Pair the first k kernel(B) addresses with the first k cokernel(A) addresses."""
    kernel = kernel_basis(b, lam)
    cokernel = cokernel_basis(a, lam)
    if k.is_finite:
        pairs = tuple(zip(islice(kernel, k.value), islice(cokernel, k.value)))
        return CompletionCertificate(target=target, at_lambda=lam,
                                     case=CompletionCase.FINITE, k=k.value, pairs=pairs)
    preview = tuple(islice(zip(kernel, cokernel), PREVIEW_PAIRS))
    return CompletionCertificate(target=target, at_lambda=lam, case=CompletionCase.INFINITE,
                                 pairs=preview, rule=ROUND_ROBIN_DIAGONAL)


def fli_completable(a: OperatorExpr, b: OperatorExpr, lam: GQ) -> CompletionReport:
    lam = GQ.of(lam)
    pa, pb = point_data(a, lam), point_data(b, lam)
    conditions = fli_conditions(pa, pb)
    report = _report(CompletionTarget.FLI, lam, pa, pb, conditions)
    if report.decision:
        # J maps all of N(B−λ) into R(A−λ)^⊥
        cert = _pairing(a, b, lam, pb.alpha, CompletionTarget.FLI)
        report.certificate = cert
        report.case = cert.case
        report.calculation_steps.append(_case_step(cert))
    logger.debug("fli_completable at %s: %s", lam, report.decision)
    return report


def fri_completable(a: OperatorExpr, b: OperatorExpr, lam: GQ) -> CompletionReport:
    lam = GQ.of(lam)
    dual = fli_completable(adjoint(b), adjoint(a), lam.conj())
    pa, pb = point_data(a, lam), point_data(b, lam)
    report = _report(CompletionTarget.FRI, lam, pa, pb, fri_conditions(pa, pb))
    if dual.decision != report.decision:
        raise PreconditionError("left/right duality disagrees at λ={}".format(lam))
    if dual.certificate is not None:
        # N(A*−λ̄) = R(A−λ)^⊥ and R(B*−λ̄)^⊥ = N(B−λ): the adjoint corner swaps each pair
        cert = CompletionCertificate(
            target=CompletionTarget.FRI, at_lambda=lam, case=dual.certificate.case,
            k=dual.certificate.k, pairs=tuple((dst, src) for src, dst in dual.certificate.pairs),
            rule=dual.certificate.rule)
        report.certificate = cert
        report.case = cert.case
        report.calculation_steps.append("certificate obtained from the adjoint pair (B*, A*) at λ̄")
        report.calculation_steps.append(_case_step(cert))
    return report


def invertible_completable(a: OperatorExpr, b: OperatorExpr, lam: GQ) -> CompletionReport:
    lam = GQ.of(lam)
    pa, pb = point_data(a, lam), point_data(b, lam)
    report = _report(CompletionTarget.INVERTIBLE, lam, pa, pb, invertible_conditions(pa, pb))
    if report.decision:
        cert = _pairing(a, b, lam, pb.alpha, CompletionTarget.INVERTIBLE)
        report.certificate = cert
        report.case = cert.case
        report.calculation_steps.append(_case_step(cert))
    return report


COMPLETION_DECISIONS = {
    CompletionTarget.FLI: fli_completable,
    CompletionTarget.FRI: fri_completable,
    CompletionTarget.INVERTIBLE: invertible_completable,
}


def complete(a: OperatorExpr, b: OperatorExpr, lam: GQ, target: CompletionTarget) -> CompletionReport:
    return COMPLETION_DECISIONS[CompletionTarget(target)](a, b, lam)


def _case_step(cert: CompletionCertificate) -> str:
    if cert.case == CompletionCase.INFINITE:
        return "infinite case: C pairs kernel(B) and cokernel(A) bases by round-robin/diagonal enumeration"
    if cert.k == 0:
        return "finite case k=0: C = 0"
    pairs = ", ".join(f"{src}↦{dst}" for src, dst in cert.pairs)
    return f"finite case k={cert.k}: C = partial isometry {pairs}"


# ------------------------------------------------------------- block data


def mc_point_data(m: BlockMatrixExpr, lam: GQ) -> Union[PointData, Deferred]:
    lam = GQ.of(lam)
    pa, pb = point_data(m.a, lam), point_data(m.b, lam)
    if m.is_zero:
        return PointData(extnat_add(pa.alpha, pb.alpha), extnat_add(pa.beta_bar, pb.beta_bar),
                         pa.closed and pb.closed)
    cert = m.c
    if cert.at_lambda != lam:
        return Deferred(f"corner was built at λ={cert.at_lambda}, asked at λ={lam}")
    if not pa.closed:
        return Deferred("A−λ has non-closed range")
    if cert.case == CompletionCase.INFINITE:
        # the pairing is a bijection N(B−λ) → R(A−λ)^⊥
        alpha, beta_bar = pa.alpha, pb.beta_bar
    else:
        alpha = extnat_add(pa.alpha, pb.alpha.minus(cert.k))
        beta_bar = extnat_add(pa.beta_bar.minus(cert.k), pb.beta_bar)
    return PointData(alpha, beta_bar, pa.closed and pb.closed)


def harte_identity_check(a: OperatorExpr, b: OperatorExpr,
                         c: Optional[CompletionCertificate], lam: GQ) -> bool:
    """α(B−λ) + β(M_C−λ) = β(B−λ) + β(A−λ) under the construction's hypotheses."""
    lam = GQ.of(lam)
    m = BlockMatrixExpr(a, b, c)
    data = mc_point_data(m, lam)
    if isinstance(data, Deferred):
        raise PreconditionError(data.reason)
    pa, pb = point_data(a, lam), point_data(b, lam)
    if not (data.alpha.value == 0 and data.closed):
        raise PreconditionError(f"M_C−λ is not left invertible at λ={lam}")
    if not (pa.alpha.value == 0 and pa.closed):
        raise PreconditionError(f"A−λ is not left invertible at λ={lam}")
    if not pb.closed:
        raise PreconditionError(f"B−λ has non-closed range at λ={lam}")
    lhs = extnat_add(pb.alpha, data.beta_alg)
    rhs = extnat_add(pb.beta_alg, pa.beta_alg)
    logger.debug("Harte identity at %s: %s = %s", lam, lhs, rhs)
    return lhs == rhs


def block_index_at(m: BlockMatrixExpr, lam: GQ):
    """Index of M_C−λ where exact data exists."""
    from ..models.numeric import extint_sub
    data = mc_point_data(m, lam)
    if isinstance(data, Deferred):
        return data
    return extint_sub(data.alpha, data.beta_alg)


__all__ = [
    "BlockMatrixExpr", "Deferred", "INF", "block_index_at", "certificate_pairs", "complete",
    "fli_completable", "fri_completable", "harte_identity_check", "invertible_completable",
    "mc_point_data",
]
