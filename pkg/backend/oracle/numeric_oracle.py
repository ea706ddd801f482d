"""Singular-value evidence for nullity, deficiency and range closedness of truncations."""
import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg
from pydantic import ValidationError

from ..completion.completion_engine import BlockMatrixExpr
from ..config import OracleConfig
from ..models.numeric import GQ, ExtNat, INF
from ..models.operator_models import OperatorExpr, PointData
from ..models.report_models import GapEvidence, NumericPointData, SizeDiagnostics
from ..operators.classifier import SpectrumKind, classify_point_data
from ..utils.errors import OracleError
from .truncation import FiniteRankCorner, Target, Truncation, shifted, truncate_expr, truncation

logger = logging.getLogger(__name__)


def singular_values(m: np.ndarray) -> np.ndarray:
    """All singular values, descending."""
    return scipy.linalg.svdvals(np.atleast_2d(m))


def near_null_count(s: Sequence[float], tol: float, gap_ratio: float) -> int:
    """Size of the cluster of near-null singular values.

    ``s`` is descending. A value joins the cluster when it is below ``tol``,
    or below both ``gap_ratio`` and ``gap_ratio`` times the next larger value.
    """
    asc = np.asarray(s)[::-1]
    count = 0
    for i, value in enumerate(asc):
        if value < tol:
            count = i + 1
        elif i + 1 < len(asc) and value < gap_ratio and value < gap_ratio * asc[i + 1]:
            count = i + 1
    return count


def _genuine(null_space: np.ndarray, edge: np.ndarray, threshold: float) -> Tuple[int, List[float]]:
    """Directions of a candidate null space that live mostly away from the edges."""
    if null_space.shape[1] == 0:
        return 0, []
    masses = np.sum(np.abs(null_space[edge, :]) ** 2, axis=0)
    interior = null_space[~edge, :]
    if interior.shape[0] == 0:
        return 0, masses.tolist()
    s = scipy.linalg.svdvals(interior)
    return int(np.sum(s > math.sqrt(1 - threshold))), masses.tolist()


def analyze(t: Truncation, lam: GQ, n: int, config: OracleConfig) -> SizeDiagnostics:
    m = shifted(t, lam)
    u, s, vh = scipy.linalg.svd(m)
    j = near_null_count(s, config.tol, config.gap_ratio)
    dim = len(s)
    kernel = vh.conj().T[:, dim - j:]
    cokernel = u[:, dim - j:]
    alpha, edge_mass = _genuine(kernel, t.edge, config.edge_mass_threshold)
    beta, adj_edge_mass = _genuine(cokernel, t.edge, config.edge_mass_threshold)
    gap = float(s[dim - j - 1]) if dim - j > 0 else None
    small = [float(x) for x in s[dim - j:]]
    logger.debug("n=%d dim=%d near-null=%d alpha=%d beta=%d gap=%s", n, dim, j, alpha, beta, gap)
    return SizeDiagnostics(
        n=n, dimension=dim,
        small_singular_values=small, adjoint_small_singular_values=small,
        edge_mass=edge_mass, adjoint_edge_mass=adj_edge_mass,
        alpha_count=alpha, beta_count=beta, gap=gap,
    )


def gap_evidence(sizes: Sequence[int], gaps: Sequence[Optional[float]], config: OracleConfig) -> GapEvidence:
    gaps = [math.inf if g is None else g for g in gaps]
    if all(math.isinf(g) for g in gaps):
        return GapEvidence.STABLE_GAP
    ratios = []
    for g0, g1 in zip(gaps, gaps[1:]):
        if math.isinf(g0):
            ratios.append(math.inf if math.isinf(g1) else 0.0)
        else:
            ratios.append(g1 / g0 if g0 > 0 else math.inf)
    if all(r >= config.stable_ratio for r in ratios):
        return GapEvidence.STABLE_GAP
    if all(r <= config.shrink_slack * n0 / n1 for r, n0, n1 in zip(ratios, sizes, sizes[1:])):
        return GapEvidence.SHRINKING_GAP
    return GapEvidence.INCONCLUSIVE


def _with(config: Optional[OracleConfig], sizes: Optional[List[int]], tol: Optional[float]) -> OracleConfig:
    config = config or OracleConfig()
    update = {}
    if sizes is not None:
        update["sizes"] = list(sizes)
    if tol is not None:
        update["tol"] = tol
    if not update:
        return config
    try:
        return OracleConfig(**{**config.model_dump(), **update})
    except ValidationError as exc:
        raise OracleError(str(exc)) from exc


def estimate_point_data(target: Target, lam: GQ, sizes: Optional[List[int]] = None,
                        tol: Optional[float] = None, config: Optional[OracleConfig] = None,
                        corner: Optional[FiniteRankCorner] = None) -> NumericPointData:
    config = _with(config, sizes, tol)
    lam = GQ.of(lam)
    per_size, capped = [], False
    for n in config.sizes:
        t = truncation(target, n, config, corner)
        capped = capped or t.capped
        per_size.append(analyze(t, lam, n, config))
    last = per_size[-2:]
    alpha = min(d.alpha_count for d in last)
    beta = min(d.beta_count for d in last)
    evidence = gap_evidence(config.sizes, [d.gap for d in per_size], config)
    alpha_capped = capped and alpha >= config.cap_per_atom
    beta_capped = capped and beta >= config.cap_per_atom
    alpha_unbounded = beta_unbounded = False
    if alpha_capped or beta_capped:
        logger.warning("oracle estimate at λ=%s reached the multiplicity cap %d", lam, config.cap_per_atom)
        wider = _raised_cap_counts(target, lam, config, corner)
        if wider is None:
            alpha_unbounded, beta_unbounded = alpha_capped, beta_capped
        else:
            alpha_unbounded = alpha_capped and wider[0] > alpha
            beta_unbounded = beta_capped and wider[1] > beta
    return NumericPointData(alpha_est=alpha, beta_est=beta, closed_evidence=evidence,
                            alpha_capped=alpha_capped, beta_capped=beta_capped,
                            alpha_unbounded=alpha_unbounded, beta_unbounded=beta_unbounded,
                            per_size=per_size)


def _raised_cap_counts(target: Target, lam: GQ, config: OracleConfig,
                       corner: Optional[FiniteRankCorner]) -> Optional[Tuple[int, int]]:
    """(α, β) counts at the largest size with twice as many copies per infinite multiplicity."""
    wider = config.model_copy(update={"cap_per_atom": 2 * config.cap_per_atom})
    n = config.sizes[-1]
    try:
        d = analyze(truncation(target, n, wider, corner), lam, n, wider)
    except OracleError as exc:
        logger.warning("cannot raise the multiplicity cap: %s", exc)
        return None
    return d.alpha_count, d.beta_count


def as_point_data(estimate: NumericPointData) -> Optional[PointData]:
    """Read an estimate as PointData; None when closedness is inconclusive."""
    if estimate.closed_evidence == GapEvidence.INCONCLUSIVE:
        return None
    alpha = INF if estimate.alpha_unbounded else ExtNat(estimate.alpha_est)
    beta_bar = INF if estimate.beta_unbounded else ExtNat(estimate.beta_est)
    return PointData(alpha, beta_bar, estimate.closed_evidence == GapEvidence.STABLE_GAP)


def oracle_point_data(target: Target, lam: GQ, config: Optional[OracleConfig] = None,
                      corner: Optional[FiniteRankCorner] = None) -> Optional[PointData]:
    return as_point_data(estimate_point_data(target, lam, config=config, corner=corner))


def oracle_classify(target: Target, lam: GQ, kind: SpectrumKind,
                    config: Optional[OracleConfig] = None,
                    corner: Optional[FiniteRankCorner] = None) -> Optional[bool]:
    data = oracle_point_data(target, lam, config, corner)
    return None if data is None else classify_point_data(data, kind)


# ----------------------------------------------------------- identities


def factorization_identity_check(a: OperatorExpr, b: OperatorExpr, c, n: int, lam: GQ,
                                 config: Optional[OracleConfig] = None) -> float:
    """Residual of M_C−λ = (I 0; 0 B−λ)(I C; 0 I)(A−λ 0; 0 I) on interior coordinates."""
    config = config or OracleConfig()
    lam = GQ.of(lam)
    block = truncation(BlockMatrixExpr(a, b, c), n, config)
    ta, tb = truncate_expr(a, n, config), truncate_expr(b, n, config)
    p, q = ta.dimension, tb.dimension
    corner = block.matrix[:p, p:]
    eye_p, eye_q = np.eye(p, dtype=complex), np.eye(q, dtype=complex)
    zero_pq, zero_qp = np.zeros((p, q), dtype=complex), np.zeros((q, p), dtype=complex)
    outer_left = np.block([[eye_p, zero_pq], [zero_qp, shifted(tb, lam)]])
    middle = np.block([[eye_p, corner], [zero_qp, eye_q]])
    outer_right = np.block([[shifted(ta, lam), zero_pq], [zero_qp, eye_q]])
    diff = outer_left @ middle @ outer_right - shifted(block, lam)
    interior = ~block.edge
    residual = diff[np.ix_(interior, interior)]
    if residual.size == 0:
        return 0.0
    return float(np.linalg.norm(residual, 2))


def invertible_factor_check(expr: OperatorExpr, lam: GQ, n: int, seed: int = 0,
                            config: Optional[OracleConfig] = None) -> bool:
    """Rank and nullity of T·S agree with those of S for a random invertible T."""
    config = config or OracleConfig()
    s_matrix = shifted(truncate_expr(expr, n, config), GQ.of(lam))
    rng = np.random.default_rng(seed)
    dim = s_matrix.shape[0]
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    t_matrix = np.eye(dim) + 0.5 * g / np.linalg.norm(g, 2)
    nullity_s = near_null_count(singular_values(s_matrix), config.tol, config.gap_ratio)
    nullity_ts = near_null_count(singular_values(t_matrix @ s_matrix), config.tol, config.gap_ratio)
    logger.debug("invertible factor: nullity %d vs %d", nullity_s, nullity_ts)
    return nullity_s == nullity_ts
