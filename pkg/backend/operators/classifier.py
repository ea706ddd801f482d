"""Pointwise invertibility classes, resolvent conditions and S± membership."""
import logging
from enum import Enum
from typing import Dict, List, Tuple

from ..models.numeric import GQ, ExtNat, ZERO
from ..models.operator_models import OperatorExpr, PointData
from ..region.arrangement import build_arrangement
from ..region.region_ops import CellEvaluator
from .operator_model import boundary_predicates, point_data, point_data_in

logger = logging.getLogger(__name__)


class SpectrumKind(str, Enum):
    SPEC = "spec"
    LEFT = "left"
    RIGHT = "right"
    USF = "usf"
    LSF = "lsf"
    ESSENTIAL = "essential"
    POINT = "point"
    DEFECT = "defect"
    FLI = "fli"
    FRI = "fri"


class BetaConvention(str, Enum):
    ALGEBRAIC = "algebraic"
    CLOSURE = "closure"


class SClassSign(str, Enum):
    PLUS = "plus"
    MINUS = "minus"


class CompletionCriterion(str, Enum):
    """Which completion criterion to evaluate."""
    FLI = "fli"
    FRI = "fri"
    INVERTIBLE = "inv"


def classify_point_data(p: PointData, kind: SpectrumKind) -> bool:
    """True when T − λ with data ``p`` lies in the good class (λ in the resolvent)."""
    kind = SpectrumKind(kind)
    left = p.alpha == ZERO and p.closed
    usf = p.alpha.is_finite and p.closed
    lsf = p.beta_alg.is_finite
    if kind == SpectrumKind.LEFT:
        return left
    if kind == SpectrumKind.RIGHT:
        return p.beta_alg == ZERO
    if kind == SpectrumKind.USF:
        return usf
    if kind == SpectrumKind.LSF:
        return lsf
    if kind == SpectrumKind.ESSENTIAL:
        return usf and lsf
    if kind == SpectrumKind.POINT:
        return p.alpha == ZERO
    if kind == SpectrumKind.DEFECT:
        return p.beta_alg == ZERO
    if kind == SpectrumKind.FLI:
        return p.alpha == ZERO and lsf
    if kind == SpectrumKind.FRI:
        return p.beta_alg == ZERO and p.alpha.is_finite
    return p.alpha == ZERO and p.beta_alg == ZERO and p.closed


def classify(expr: OperatorExpr, lam: GQ, kind: SpectrumKind) -> bool:
    return classify_point_data(point_data(expr, lam), kind)


def beta_of(p: PointData, conv: BetaConvention) -> ExtNat:
    return p.beta_alg if BetaConvention(conv) == BetaConvention.ALGEBRAIC else p.beta_bar


# ----------------------------------------------------- completion criteria


def fli_conditions(pa: PointData, pb: PointData) -> Dict[str, bool]:
    """Conditions (a)-(c) for a Fredholm left invertible completion."""
    beta_a, alpha_b = pa.beta_alg, pb.alpha
    return {
        "a": pa.alpha == ZERO and pa.closed,
        "b": pb.beta_alg.is_finite,
        "c": (alpha_b <= beta_a and beta_a.is_finite) or (alpha_b.is_inf and beta_a.is_inf),
    }


def fri_conditions(pa: PointData, pb: PointData) -> Dict[str, bool]:
    """Right-invertible criterion, read off the left one for (B*, A*)."""
    return fli_conditions(pb.swapped(), pa.swapped())


def invertible_conditions(pa: PointData, pb: PointData) -> Dict[str, bool]:
    return {
        "a": pa.alpha == ZERO and pa.closed,
        "b": pb.beta_alg == ZERO,
        "c": pb.alpha == pa.beta_alg,
    }


CONDITIONS = {
    CompletionCriterion.FLI: fli_conditions,
    CompletionCriterion.FRI: fri_conditions,
    CompletionCriterion.INVERTIBLE: invertible_conditions,
}


def resolvent_condition(expr_a: OperatorExpr, expr_b: OperatorExpr, lam: GQ,
                        which: CompletionCriterion) -> bool:
    conditions = CONDITIONS[CompletionCriterion(which)](point_data(expr_a, lam), point_data(expr_b, lam))
    logger.debug("%s at %s: %s", CompletionCriterion(which).value, lam, conditions)
    return all(conditions.values())


# ------------------------------------------------------------- S± classes


def s_class_violations(expr: OperatorExpr, sign: SClassSign,
                       conv: BetaConvention) -> List[Tuple[Tuple, PointData]]:
    """Cells where the S± comparison fails, with the offending point data."""
    arrangement = build_arrangement(boundary_predicates(expr))
    found = []
    for cell in arrangement.cells:
        data = point_data_in(expr, CellEvaluator(arrangement, cell))
        alpha, beta = data.alpha, beta_of(data, conv)
        if alpha.is_inf and beta.is_inf:
            continue
        holds = alpha >= beta if SClassSign(sign) == SClassSign.PLUS else alpha <= beta
        if not holds:
            found.append((cell.key, data))
    return found


def s_class_membership(expr: OperatorExpr, sign: SClassSign, conv: BetaConvention) -> bool:
    return not s_class_violations(expr, sign, conv)
