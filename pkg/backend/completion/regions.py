"""Δ sets, intersection spectra and W hole sets of a pair (A, B) as exact regions."""
import logging
from enum import Enum
from typing import Callable, Tuple

from ..models.operator_models import OperatorExpr, PointData
from ..models.report_models import CompletionTarget
from ..operators.classifier import CONDITIONS, CompletionCriterion, SpectrumKind, classify_point_data
from ..operators.operator_model import boundary_predicates, normalize, point_data_in
from ..operators.spectra import labelled_region
from ..region.predicates import canonical_predicates
from ..region.region_ops import RegionExpr, union
from ..utils.errors import PreconditionError

logger = logging.getLogger(__name__)

PairLabel = Callable[[PointData, PointData], bool]


class WForm(str, Enum):
    MAIN = "main"
    ALT = "alt"


THEOREM_OF_TARGET = {
    CompletionTarget.FLI: CompletionCriterion.FLI,
    CompletionTarget.FRI: CompletionCriterion.FRI,
    CompletionTarget.INVERTIBLE: CompletionCriterion.INVERTIBLE,
}


def _side(target) -> CompletionTarget:
    target = CompletionTarget(target)
    if target == CompletionTarget.INVERTIBLE:
        raise PreconditionError("region identities are stated for the fli and fri targets only")
    return target


def joint_predicates(a: OperatorExpr, b: OperatorExpr):
    return canonical_predicates(boundary_predicates(a) + boundary_predicates(b))


def pair_region(a: OperatorExpr, b: OperatorExpr, label: PairLabel) -> RegionExpr:
    """Cells of the joint arrangement where ``label(data(A−λ), data(B−λ))`` holds."""
    a, b = normalize(a), normalize(b)
    return labelled_region(joint_predicates(a, b),
                           lambda env: label(point_data_in(a, env), point_data_in(b, env)))


def _good(kind: SpectrumKind) -> Callable[[PointData], bool]:
    return lambda p: classify_point_data(p, kind)


left, right = _good(SpectrumKind.LEFT), _good(SpectrumKind.RIGHT)
usf, lsf = _good(SpectrumKind.USF), _good(SpectrumKind.LSF)
essential = _good(SpectrumKind.ESSENTIAL)
fli, fri = _good(SpectrumKind.FLI), _good(SpectrumKind.FRI)


# --------------------------------------------------------------------- Δ


def _delta_fli(pa: PointData, pb: PointData) -> bool:
    alpha_b, beta_a = pb.alpha, pa.beta_alg
    first = alpha_b > beta_a or beta_a.is_inf
    return first and not (alpha_b.is_inf and beta_a.is_inf)


def _delta_fri(pa: PointData, pb: PointData, literal: bool = False) -> bool:
    alpha_b, beta_a = pb.alpha, pa.beta_alg
    first = beta_a > alpha_b or alpha_b.is_inf
    if literal:
        second = beta_a != alpha_b or (beta_a == pa.alpha and beta_a.is_finite)
    else:
        second = beta_a != alpha_b or beta_a.is_finite
    return first and second


def delta_region(a: OperatorExpr, b: OperatorExpr, target: CompletionTarget,
                 literal: bool = False) -> RegionExpr:
    """Exceptional set of the intersection of all completed spectra.

    ``literal`` evaluates the right-invertible second set with α(A−λ) in place
    of α(B−λ).
    """
    if _side(target) == CompletionTarget.FLI:
        return pair_region(a, b, _delta_fli)
    return pair_region(a, b, lambda pa, pb: _delta_fri(pa, pb, literal))


def intersection_spectrum_region(a: OperatorExpr, b: OperatorExpr, target: CompletionTarget,
                                 literal: bool = False) -> RegionExpr:
    """⋂_C σ_target(M_C)."""
    if _side(target) == CompletionTarget.FLI:
        region = pair_region(a, b, lambda pa, pb: not left(pa) or not lsf(pb) or _delta_fli(pa, pb))
    else:
        region = pair_region(
            a, b, lambda pa, pb: not right(pb) or not usf(pa) or _delta_fri(pa, pb, literal))
    logger.debug("intersection spectrum for %s built", CompletionTarget(target).value)
    return region


def completable_region(a: OperatorExpr, b: OperatorExpr, target: CompletionTarget) -> RegionExpr:
    """λ where a completion of the requested kind exists."""
    conditions = CONDITIONS[THEOREM_OF_TARGET[CompletionTarget(target)]]
    return pair_region(a, b, lambda pa, pb: all(conditions(pa, pb).values()))


# --------------------------------------------------------------------- W


def _both_infinite(pa: PointData, pb: PointData) -> bool:
    return pb.alpha.is_inf and pa.beta_alg.is_inf


def _w_parts_fli(form: WForm) -> Tuple[PairLabel, PairLabel]:
    def w1(pa, pb):
        return left(pa) and lsf(pb) and _both_infinite(pa, pb)

    def w2(pa, pb):
        if form == WForm.ALT:
            return fli(pa) and essential(pb) and pb.alpha.value > 0 and pb.alpha <= pa.beta_alg
        return (left(pa) and lsf(pb) and pa.beta_alg.is_finite and pb.alpha.is_finite
                and 0 < pb.alpha.value <= pa.beta_alg.value)

    return w1, w2


def _w_parts_fri(form: WForm, literal: bool = False) -> Tuple[PairLabel, PairLabel]:
    def w1(pa, pb):
        return right(pb) and usf(pa) and _both_infinite(pa, pb)

    def w2(pa, pb):
        if form == WForm.ALT:
            return fri(pb) and essential(pa) and pa.beta_alg.value > 0 and pa.beta_alg <= pb.alpha
        side = lsf(pa) if literal else usf(pa)
        return (right(pb) and side and pb.alpha.is_finite and pa.beta_alg.is_finite
                and 0 < pa.beta_alg.value <= pb.alpha.value)

    return w1, w2


def w_parts(a: OperatorExpr, b: OperatorExpr, target: CompletionTarget,
            form: WForm = WForm.MAIN, literal: bool = False) -> Tuple[RegionExpr, RegionExpr]:
    """(W1, W2): the doubly-infinite part and the finite part of W.

    ``literal`` only affects the right-invertible main form, replacing
    ρ_SF+(A) by ρ_SF−(A) in the finite part.
    """
    form = WForm(form)
    if _side(target) == CompletionTarget.FLI:
        w1, w2 = _w_parts_fli(form)
    else:
        w1, w2 = _w_parts_fri(form, literal)
    return pair_region(a, b, w1), pair_region(a, b, w2)


def w_region(a: OperatorExpr, b: OperatorExpr, target: CompletionTarget,
             form: WForm = WForm.MAIN) -> RegionExpr:
    w1, w2 = w_parts(a, b, target, form)
    return union(w1, w2)


def exceptional_region(a: OperatorExpr, b: OperatorExpr, target: CompletionTarget) -> RegionExpr:
    """σ_d(A)∩σ_l(B) for fli, σ_p(B)∩σ_r(A) for fri."""
    if _side(target) == CompletionTarget.FLI:
        return pair_region(a, b, lambda pa, pb: not classify_point_data(pa, SpectrumKind.DEFECT)
                           and not left(pb))
    return pair_region(a, b, lambda pa, pb: not classify_point_data(pb, SpectrumKind.POINT)
                       and not right(pa))
