import logging
from typing import Any, Dict, Optional

from ..config import DEFAULT_CONFIG, CalculusConfig, RegionConfig
from ..models.numeric import GQ
from ..models.operator_models import OperatorExpr
from ..models.report_models import SCHEMA_VERSION
from ..region.region_ops import cells, is_bounded
from .classifier import SpectrumKind, classify_point_data
from .operator_model import boundary_predicates, index, normalize, point_data
from .spectra import spectrum_region

logger = logging.getLogger(__name__)


class OperatorEngine:
    """Pointwise classification and spectral regions of a single expression."""

    def __init__(self, config: Optional[CalculusConfig] = None):
        self.config = config or DEFAULT_CONFIG

    @property
    def region_config(self) -> Optional[RegionConfig]:
        # None keeps the memoized default arrangements
        return None if self.config.region == RegionConfig() else self.config.region

    def classify(self, expr: OperatorExpr, lam: GQ,
                 kind: Optional[SpectrumKind] = None) -> Dict[str, Any]:
        expr, lam = normalize(expr), GQ.of(lam)
        data = point_data(expr, lam)
        classes = {k.value: classify_point_data(data, k) for k in SpectrumKind}
        report: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "lambda": lam.to_json(),
            "point_data": data.to_json(),
            "classes": classes,
            "index": index(expr, lam).to_json(),
        }
        if kind is not None:
            kind = SpectrumKind(kind)
            report["kind"] = kind.value
            report["resolvent"] = classes[kind.value]
        logger.debug("classified at %s: %s", lam, data)
        return report

    def spectrum(self, expr: OperatorExpr, kind: SpectrumKind,
                 with_cells: bool = False) -> Dict[str, Any]:
        expr, kind = normalize(expr), SpectrumKind(kind)
        region = spectrum_region(expr, kind)
        decomp = cells([region], self.region_config)
        report: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "kind": kind.value,
            "region": region.to_json(),
            "boundary_predicates": [p.to_json() for p in boundary_predicates(expr)],
            "cell_counts": {k: decomp.count(k) for k in ("face", "arc", "vertex")},
            "bounded": is_bounded(region, self.region_config),
        }
        if with_cells:
            report["cells"] = decomp.to_json()
        return report
