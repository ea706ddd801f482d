"""Spectra of operator expressions as exact plane regions."""
import logging
from typing import Callable, Dict, Sequence, Tuple

from ..models.operator_models import OperatorExpr
from ..region.arrangement import build_arrangement
from ..region.predicates import Evaluator, Predicate, disj, sign_literals
from ..region.region_ops import EMPTY, PLANE, CellEvaluator, RegionExpr, equals, eta
from ..utils.errors import ArrangementError
from .classifier import SpectrumKind, classify_point_data
from .operator_model import boundary_predicates, point_data_in

logger = logging.getLogger(__name__)


def labelled_region(predicates: Sequence[Predicate],
                    label: Callable[[Evaluator], bool]) -> RegionExpr:
    """Region of the cells where ``label`` holds.

    ``label`` must depend only on the predicate signs, so each realized sign
    class becomes one conjunction of literals.
    """
    arrangement = build_arrangement(predicates)
    classes: Dict[Tuple, bool] = {}
    for cell in arrangement.cells:
        cls = (cell.signs, cell.at)
        value = label(CellEvaluator(arrangement, cell))
        if classes.setdefault(cls, value) != value:
            raise ArrangementError("label is not a function of the predicate signs")
    if all(classes.values()):
        return PLANE
    if not any(classes.values()):
        return EMPTY
    return RegionExpr(disj(*(sign_literals(arrangement.circles, signs, arrangement.points, at)
                             for (signs, at), inside in classes.items() if inside)))


def spectrum_region(expr: OperatorExpr, kind: SpectrumKind) -> RegionExpr:
    kind = SpectrumKind(kind)
    region = labelled_region(
        boundary_predicates(expr),
        lambda env: not classify_point_data(point_data_in(expr, env), kind))
    logger.debug("%s spectrum built over %d predicates", kind.value,
                 len(boundary_predicates(expr)))
    return region


def eta_spectrum_equality(expr: OperatorExpr) -> bool:
    """η(σ) = η(σ_FLI) = η(σ_FRI)."""
    full = eta(spectrum_region(expr, SpectrumKind.SPEC))
    return all(equals(full, eta(spectrum_region(expr, kind)))
               for kind in (SpectrumKind.FLI, SpectrumKind.FRI))
