#!/usr/bin/env python3
"""
Tests for the truncation oracle
"""
from fractions import Fraction

import numpy as np
import pytest
from pydantic import ValidationError

from backend.completion.completion_engine import BlockMatrixExpr, fli_completable
from backend.completion.theorem_checks import falsify_non_completable
from backend.config import CalculusConfig, OracleConfig, VerificationConfig
from backend.dsl import parse_expr
from backend.models.numeric import GQ, INF, ZERO, ExtNat
from backend.models.operator_models import Atom, AtomKind, OperatorExpr, PointData
from backend.models.report_models import GapEvidence, VerdictOutcome
from backend.operators.classifier import SpectrumKind
from backend.oracle.numeric_oracle import (
    as_point_data, estimate_point_data, factorization_identity_check, gap_evidence,
    invertible_factor_check, near_null_count, oracle_classify, oracle_point_data, singular_values,
)
from backend.oracle.truncation import FiniteRankCorner, truncate, truncate_expr, truncation
from backend.utils.errors import OracleError

S = OperatorExpr.of(Atom(AtomKind.USHIFT))
S_STAR = OperatorExpr.of(Atom(AtomKind.USHIFT_ADJ))
SMALL = OracleConfig(sizes=[32, 64], cap_per_atom=2)
HALF = GQ(Fraction(1, 2))


def test_singular_values_are_descending():
    s = singular_values(np.diag([1.0, 3.0, 2.0]))
    assert np.allclose(s, [3.0, 2.0, 1.0])
    assert np.allclose(singular_values(np.eye(4, k=-1)), [1.0, 1.0, 1.0, 0.0])


def test_near_null_count():
    assert near_null_count([3.0, 2.0, 1e-12], tol=1e-8, gap_ratio=1e-2) == 1
    assert near_null_count([3.0, 2.0, 1.0], tol=1e-8, gap_ratio=1e-2) == 0
    # below the gap ratio relative to its neighbour
    assert near_null_count([1.0, 1e-3], tol=1e-8, gap_ratio=1e-2) == 1
    assert near_null_count([1.0, 0.5], tol=1e-8, gap_ratio=1e-2) == 0


def test_gap_evidence():
    config = OracleConfig()
    sizes = [64, 128, 256]
    assert gap_evidence(sizes, [1.0, 1.0, 1.0], config) == GapEvidence.STABLE_GAP
    assert gap_evidence(sizes, [None, None, None], config) == GapEvidence.STABLE_GAP
    assert gap_evidence(sizes, [0.1, 0.05, 0.025], config) == GapEvidence.SHRINKING_GAP
    assert gap_evidence(sizes, [0.1, 0.09, 0.01], config) == GapEvidence.INCONCLUSIVE


def test_truncated_shifts():
    m = truncate(S, 4)
    assert np.array_equal(m, np.eye(4, k=-1))
    assert np.array_equal(truncate(S_STAR, 4), np.eye(4, k=1))
    t = truncate_expr(S, 8)
    assert t.edge.tolist() == [False] * 7 + [True]


def test_adjoint_shift_kernel_is_found_away_from_the_edge():
    estimate = estimate_point_data(S_STAR, 0, config=SMALL)
    assert (estimate.alpha_est, estimate.beta_est) == (1, 0)
    assert estimate.closed_evidence == GapEvidence.STABLE_GAP
    assert as_point_data(estimate) == PointData(ExtNat(1), ZERO, True)


def test_shift_cokernel_inside_the_disk():
    assert oracle_point_data(S, HALF, SMALL) == PointData(ZERO, ExtNat(1), True)
    assert oracle_classify(S, HALF, SpectrumKind.LEFT, SMALL) is True
    assert oracle_classify(S, HALF, SpectrumKind.RIGHT, SMALL) is False


def test_completed_shift_pair_is_invertible_in_truncation():
    cert = fli_completable(S, S_STAR, GQ(0)).certificate
    m = BlockMatrixExpr(S, S_STAR, cert)
    estimate = estimate_point_data(m, 0, sizes=[64, 128, 256])
    assert estimate.alpha_est == 0
    assert estimate.beta_est == 0
    assert estimate.closed_evidence == GapEvidence.STABLE_GAP
    assert len(estimate.per_size) == 3


def test_zero_corner_keeps_both_defects():
    data = oracle_point_data(BlockMatrixExpr(S, S_STAR), 0, SMALL)
    assert data == PointData(ExtNat(1), ExtNat(1), True)


def test_infinite_multiplicity_reads_as_infinity():
    many = OperatorExpr.of(Atom(AtomKind.USHIFT_ADJ, mult=INF))
    estimate = estimate_point_data(many, 0, config=SMALL)
    assert estimate.alpha_capped
    assert estimate.to_json()["capped"] is True
    assert as_point_data(estimate).alpha == INF
    assert estimate.alpha_unbounded


def test_finite_multiplicity_past_the_cap_stays_finite():
    # the infinite eigenvalue 5 is cut down, the kernel at 0 has dimension 3
    expr = OperatorExpr((Atom(AtomKind.USHIFT_ADJ, mult=ExtNat(3)),
                         Atom(AtomKind.DIAG, values=((GQ(5), INF),))))
    estimate = estimate_point_data(expr, 0, config=SMALL)
    assert estimate.alpha_capped
    assert not estimate.alpha_unbounded
    assert as_point_data(estimate) == PointData(ExtNat(3), ZERO, True)


def test_factorization_residual_vanishes():
    cert = fli_completable(S, S_STAR, GQ(0)).certificate
    assert factorization_identity_check(S, S_STAR, cert, 32, GQ(0)) < 1e-9
    assert factorization_identity_check(S, S_STAR, cert, 32, HALF) < 1e-9


def test_invertible_factor_keeps_the_nullity():
    assert invertible_factor_check(S, 0, 32, seed=1)
    assert invertible_factor_check(S_STAR, HALF, 32, seed=2)


def test_finite_rank_corner_is_placed_in_the_upper_right():
    rng = np.random.default_rng(0)
    corner = FiniteRankCorner.random(rng, rank=2)
    t = truncation(BlockMatrixExpr(S, S_STAR), 8, corner=corner)
    assert t.dimension == 16
    assert np.linalg.matrix_rank(t.matrix[:8, 8:]) == 2
    assert not t.matrix[8:, :8].any()


def test_oracle_limits():
    with pytest.raises(OracleError):
        truncate_expr(S, 1)
    with pytest.raises(OracleError):
        truncate_expr(S, 32, OracleConfig(max_dimension=16))
    with pytest.raises(OracleError):
        estimate_point_data(S, 0, sizes=[64, 32])
    with pytest.raises(ValidationError):
        OracleConfig(sizes=[64])


def test_bilateral_block_keeps_the_kernel_behind_a_random_corner():
    # A − λ invertible, B − λ has a one-dimensional kernel, so α(M_C − λ) = 1 for every C
    a = parse_expr("bshift(-1-1/2i, -1i)")
    b = parse_expr("adj(ushift(1/2+1/2i, -1))")
    lam = GQ(Fraction(7, 16), Fraction(-5, 8))
    assert not fli_completable(a, b, lam).decision
    m = BlockMatrixExpr(a, b)
    rng = np.random.default_rng(4)
    for rank in (1, 2, 3):
        corner = FiniteRankCorner.random(rng, rank=rank)
        estimate = estimate_point_data(m, lam, sizes=[64, 128], corner=corner)
        assert estimate.alpha_est == 1, rank
    config = CalculusConfig(oracle=OracleConfig(sizes=[64, 128]),
                            verification=VerificationConfig(samples=5, seed=2))
    assert falsify_non_completable(a, b, lam, config=config).outcome == VerdictOutcome.SAMPLED_PASS


def test_bilateral_sections_are_centred():
    t = truncate_expr(OperatorExpr.of(Atom(AtomKind.BSHIFT)), 16)
    assert t.anchor() == 8
    assert not t.edge[8:12].any()
    corner = FiniteRankCorner(np.ones((1, 2)), np.ones((1, 2)))
    block = truncation(BlockMatrixExpr(OperatorExpr.of(Atom(AtomKind.BSHIFT)), S_STAR), 16, corner=corner)
    assert np.argwhere(block.matrix[:16, 16:]).tolist() == [[8, 0], [8, 1], [9, 0], [9, 1]]
