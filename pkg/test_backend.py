#!/usr/bin/env python3
"""
End-to-end suites over seeded random corpora of operator pairs
"""
import random
from fractions import Fraction

import pytest

from backend.completion.completion_engine import (
    BlockMatrixExpr, fli_completable, fri_completable, harte_identity_check, mc_point_data,
)
from backend.completion.regions import completable_region, joint_predicates, w_region
from backend.completion.theorem_checks import (
    block_lemma_check, corollary_consistency_check, falsify_non_completable, filling_holes_check,
    sandwich_check, w_forms_check, zero_block,
)
from backend.config import CalculusConfig, OracleConfig, VerificationConfig
from backend.dsl import parse_expr
from backend.models.numeric import GQ, ZERO, ExtNat
from backend.models.operator_models import Atom, AtomKind, OperatorExpr, PointData
from backend.models.report_models import CompletionTarget, GapEvidence, VerdictOutcome
from backend.operators.classifier import SpectrumKind, classify_point_data
from backend.operators.operator_model import adjoint, boundary_predicates, point_data
from backend.operators.spectra import spectrum_region
from backend.oracle.numeric_oracle import estimate_point_data, oracle_point_data
from backend.region.region_ops import equals, eta, open_disk, union
from backend.utils.random_instances import random_expr, random_lambda, random_pair

S = OperatorExpr.of(Atom(AtomKind.USHIFT))
S_STAR = OperatorExpr.of(Atom(AtomKind.USHIFT_ADJ))
SIDES = [CompletionTarget.FLI, CompletionTarget.FRI]
KIND = {CompletionTarget.FLI: SpectrumKind.FLI, CompletionTarget.FRI: SpectrumKind.FRI}


def corpus(seed: int, count: int, **kwargs):
    rng = random.Random(seed)
    return [random_pair(rng, **kwargs) for _ in range(count)]


NESTED = [
    # concentric circles of radius 2 and 1/2
    (parse_expr("ushift(0, 2)"), parse_expr("adj(ushift(0, 1/2))")),
    # internally tangent at 1
    (parse_expr("ushift (+) bshift(1/2, 1/2)"), parse_expr("adj(ushift(1/2, 1/2))")),
    (parse_expr("adj(ushift(0, 3/2)) (+) diag{0:inf}"), parse_expr("ushift(1/2, 1/2) (+) ushift(0, 2)")),
]
PAIRS = NESTED + corpus(2024, 47)
WIDE = Fraction(1, 4)


def test_canonical_shift_pair_completion():
    """S ⊕ S* completed at 0 becomes invertible, exactly and in truncation"""
    report = fli_completable(S, S_STAR, GQ(0))
    assert report.decision and report.certificate.k == 1
    m = BlockMatrixExpr(S, S_STAR, report.certificate)
    assert mc_point_data(m, GQ(0)) == PointData(ZERO, ZERO, True)
    assert harte_identity_check(S, S_STAR, report.certificate, GQ(0))
    estimate = estimate_point_data(m, GQ(0), sizes=[64, 128, 256], tol=1e-8)
    assert (estimate.alpha_est, estimate.beta_est) == (0, 0)
    assert estimate.closed_evidence == GapEvidence.STABLE_GAP


@pytest.mark.parametrize("target", SIDES)
def test_canonical_filling_in_holes(target):
    kind = KIND[target]
    w = w_region(S, S_STAR, target)
    assert equals(w, open_disk(GQ(0), 1))
    inputs = union(spectrum_region(S, kind), spectrum_region(S_STAR, kind))
    m0 = spectrum_region(zero_block(S, S_STAR), kind)
    assert equals(inputs, union(m0, w))
    assert equals(eta(inputs), eta(m0))
    assert filling_holes_check(S, S_STAR, target=target).outcome == VerdictOutcome.EXACT


@pytest.mark.parametrize("target", SIDES)
def test_intersection_spectrum_matches_pointwise_criterion(target):
    decide = fli_completable if target == CompletionTarget.FLI else fri_completable
    rng = random.Random(11)
    for a, b in PAIRS:
        verdict = corollary_consistency_check(a, b, target=target)
        assert verdict.outcome == VerdictOutcome.EXACT, (a, b, verdict.calculation_steps)
        region = completable_region(a, b, target)
        lam = random_lambda(rng, joint_predicates(a, b))
        assert region.member(lam) == decide(a, b, lam).decision


def test_adjoint_duality_on_a_thousand_points():
    rng = random.Random(5)
    failures = []
    for _ in range(1000):
        expr = random_expr(rng, max_atoms=3)
        if rng.random() < 0.5:
            lam = random_lambda(rng, boundary_predicates(expr), margin=Fraction(0))
        else:
            lam = GQ(Fraction(rng.randint(-8, 8), 4), Fraction(rng.randint(-8, 8), 4))
        p, q = point_data(expr, lam), point_data(adjoint(expr), lam.conj())
        if q != p.swapped():
            failures.append((expr, lam))
        elif classify_point_data(p, SpectrumKind.FLI) != classify_point_data(q, SpectrumKind.FRI):
            failures.append((expr, lam))
    assert failures == []


def test_oracle_agrees_with_exact_point_data():
    rng = random.Random(17)
    config = OracleConfig(sizes=[64, 128, 256], tol=1e-8)
    disagreements = []
    for _ in range(100):
        expr = random_expr(rng, max_atoms=2, inf_weight=0.0)
        lam = random_lambda(rng, boundary_predicates(expr), margin=WIDE)
        exact = point_data(expr, lam)
        estimate = oracle_point_data(expr, lam, config)
        if estimate is None or (
                (estimate.alpha == ZERO) != (exact.alpha == ZERO)
                or (estimate.beta_alg == ZERO) != (exact.beta_alg == ZERO)
                or estimate.closed != exact.closed):
            disagreements.append((expr, lam, exact, estimate))
    assert disagreements == []


@pytest.mark.parametrize("target", SIDES)
def test_sandwich_and_block_lemma_with_zero_corner(target):
    for a, b in PAIRS:
        assert sandwich_check(a, b, target=target).outcome == VerdictOutcome.EXACT, (a, b)
        assert block_lemma_check(a, b).outcome == VerdictOutcome.EXACT, (a, b)


def test_sandwich_and_block_lemma_with_constructed_corners():
    config = CalculusConfig(oracle=OracleConfig(sizes=[64, 128], cap_per_atom=2),
                            verification=VerificationConfig(samples=4, seed=3, sample_margin=WIDE))
    rng = random.Random(8)
    checked = 0
    for a, b in [(S, S_STAR)] + corpus(99, 20, inf_weight=0.0):
        # look for a λ whose corner is nonzero
        for _ in range(10):
            lam = random_lambda(rng, joint_predicates(a, b), margin=WIDE)
            report = fli_completable(a, b, lam)
            if report.decision and not report.certificate.is_zero:
                break
        else:
            continue
        checked += 1
        cert = report.certificate
        assert sandwich_check(a, b, cert, config=config).outcome != VerdictOutcome.FAIL, (a, b, lam)
        assert block_lemma_check(a, b, cert, config=config).outcome != VerdictOutcome.FAIL, (a, b, lam)
    assert checked > 0


@pytest.mark.parametrize("target", SIDES)
def test_main_and_alternative_w_forms_agree(target):
    for a, b in PAIRS:
        assert w_forms_check(a, b, target=target).outcome == VerdictOutcome.EXACT, (a, b)


def test_random_corners_never_fake_a_completion():
    config = CalculusConfig(oracle=OracleConfig(sizes=[64, 128]),
                            verification=VerificationConfig(samples=25, seed=1))
    rng = random.Random(23)
    found = 0
    while found < 20:
        a, b = random_pair(rng, max_atoms=1, inf_weight=0.0)
        lam = random_lambda(rng, joint_predicates(a, b), margin=WIDE)
        if fli_completable(a, b, lam).decision:
            continue
        found += 1
        verdict = falsify_non_completable(a, b, lam, config=config)
        assert verdict.outcome != VerdictOutcome.FAIL, (a, b, lam, verdict.calculation_steps)


def test_counting_pair_for_the_falsifier():
    # α(S*⊕S*) = 2 exceeds β(S) = 1 at 0
    b = OperatorExpr.of(Atom(AtomKind.USHIFT_ADJ, mult=ExtNat(2)))
    config = CalculusConfig(oracle=OracleConfig(sizes=[32, 64]),
                            verification=VerificationConfig(samples=5, seed=0))
    verdict = falsify_non_completable(S, b, GQ(0), config=config)
    assert verdict.outcome == VerdictOutcome.SAMPLED_PASS
    assert verdict.samples == 5
