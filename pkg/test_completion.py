#!/usr/bin/env python3
"""
Tests for completion decisions, certificates, W sets and the spectral identity checks
"""
import pytest

from backend.config import CalculusConfig, OracleConfig, VerificationConfig
from backend.models.numeric import GQ, INF, ExtInt, ExtNat
from backend.models.operator_models import Atom, AtomKind, BasisAddress, OperatorExpr, PointData
from backend.models.report_models import (
    ROUND_ROBIN_DIAGONAL, CompletionCase, CompletionCertificate, CompletionTarget, VerdictOutcome,
)
from backend.completion.completion_engine import (
    BlockMatrixExpr, Deferred, PREVIEW_PAIRS, block_index_at, certificate_pairs, complete,
    fli_completable, fri_completable, harte_identity_check, invertible_completable, mc_point_data,
)
from backend.completion.regions import (
    WForm, completable_region, delta_region, exceptional_region, intersection_spectrum_region,
    w_parts, w_region,
)
from backend.completion.theorem_checks import (
    Tally, block_lemma_check, completion_soundness_check, corollary_consistency_check,
    dong_condition_check, dong_condition_verdict, duality_check, eta_check, falsify_non_completable,
    filling_holes_check,
    PAIR_CHECKS, harte_check, no_interior_corollary_check, no_interior_corollary_verdict, run_check,
    s_class_proposition_check, s_class_proposition_verdict,
    sandwich_check, w_forms_check,
)
from backend.completion.verification_engine import VerificationEngine
from backend.region.region_ops import EMPTY, circle, closed_disk, complement, equals, open_disk
from backend.utils.errors import PreconditionError

S = OperatorExpr.of(Atom(AtomKind.USHIFT))
S_STAR = OperatorExpr.of(Atom(AtomKind.USHIFT_ADJ))
S_STAR_2 = OperatorExpr.of(Atom(AtomKind.USHIFT_ADJ, mult=ExtNat(2)))
U = OperatorExpr.of(Atom(AtomKind.BSHIFT))
ZERO_LAMBDA = GQ(0)
E0 = BasisAddress(0, 0, 0)
DISK = closed_disk(GQ(0), 1)
OPEN_DISK = open_disk(GQ(0), 1)
CIRCLE = circle(GQ(0), 1)

SMALL_CONFIG = CalculusConfig(
    oracle=OracleConfig(sizes=[32, 64], cap_per_atom=2),
    verification=VerificationConfig(samples=3, seed=7),
)


# ------------------------------------------------------------- decisions


def test_fli_completion_of_the_shift_pair():
    report = fli_completable(S, S_STAR, ZERO_LAMBDA)
    assert report.decision
    assert report.failed_conditions == []
    assert report.case == CompletionCase.FINITE
    cert = report.certificate
    assert cert.k == 1
    assert cert.pairs == ((E0, E0),)
    assert "finite case k=1" in report.calculation_steps[-1]


def test_fri_certificate_swaps_the_dual_pairs():
    report = fri_completable(S, S_STAR, ZERO_LAMBDA)
    assert report.decision
    assert report.certificate.target == CompletionTarget.FRI
    assert report.certificate.pairs == ((E0, E0),)
    assert any("adjoint pair" in step for step in report.calculation_steps)


def test_invertible_completion_needs_matching_dimensions():
    assert invertible_completable(S, S_STAR, ZERO_LAMBDA).decision
    report = invertible_completable(S, S_STAR_2, ZERO_LAMBDA)
    assert not report.decision
    assert report.failed_conditions == ["c"]


def test_too_large_kernel_blocks_completion():
    report = complete(S, S_STAR_2, ZERO_LAMBDA, CompletionTarget.FLI)
    assert not report.decision
    assert report.failed_conditions == ["c"]
    assert report.certificate is None
    assert report.case == CompletionCase.NONE
    assert report.to_json()["decision"] == "no"


def test_non_closed_range_blocks_completion():
    report = complete(S, S_STAR, GQ(1), "fli")
    assert "a" in report.failed_conditions


def test_zero_corner_when_b_is_injective():
    report = fli_completable(S, S, ZERO_LAMBDA)
    assert report.decision
    assert report.certificate.is_zero
    assert report.calculation_steps[-1] == "finite case k=0: C = 0"


def test_infinite_case_keeps_a_preview_and_a_rule():
    a = OperatorExpr.of(Atom(AtomKind.USHIFT, mult=INF))
    b = OperatorExpr.of(Atom(AtomKind.USHIFT_ADJ, mult=INF))
    report = fli_completable(a, b, ZERO_LAMBDA)
    cert = report.certificate
    assert cert.case == CompletionCase.INFINITE
    assert cert.rule == ROUND_ROBIN_DIAGONAL
    assert len(cert.pairs) == PREVIEW_PAIRS
    assert len(list(certificate_pairs(cert, a, b, limit=20))) == 20
    assert mc_point_data(BlockMatrixExpr(a, b, cert), ZERO_LAMBDA) == PointData(ExtNat(0), ExtNat(0), True)


def test_certificate_json():
    cert = fli_completable(S, S_STAR, ZERO_LAMBDA).certificate
    data = cert.to_json()
    assert data["k"] == 1 and data["case"] == "finite"
    assert CompletionCertificate.from_json(data) == cert


# ------------------------------------------------------------ block data


def test_block_point_data_with_and_without_corner():
    cert = fli_completable(S, S_STAR, ZERO_LAMBDA).certificate
    assert mc_point_data(BlockMatrixExpr(S, S_STAR), ZERO_LAMBDA) == PointData(ExtNat(1), ExtNat(1), True)
    assert mc_point_data(BlockMatrixExpr(S, S_STAR, cert), ZERO_LAMBDA) == PointData(ExtNat(0), ExtNat(0), True)
    assert block_index_at(BlockMatrixExpr(S, S_STAR, cert), ZERO_LAMBDA) == ExtInt.fin(0)
    assert isinstance(mc_point_data(BlockMatrixExpr(S, S_STAR, cert), GQ(2)), Deferred)


def test_index_identity_of_the_construction():
    cert = fli_completable(S, S_STAR, ZERO_LAMBDA).certificate
    assert harte_identity_check(S, S_STAR, cert, ZERO_LAMBDA)
    with pytest.raises(PreconditionError):
        harte_identity_check(S, S_STAR, None, ZERO_LAMBDA)
    assert harte_check(S, S_STAR, cert).outcome == VerdictOutcome.EXACT
    assert harte_check(S, S_STAR, None, lam=ZERO_LAMBDA).outcome == VerdictOutcome.NOT_APPLICABLE


# ---------------------------------------------------------------- regions


@pytest.mark.parametrize("target", [CompletionTarget.FLI, CompletionTarget.FRI])
def test_w_is_the_open_disk_for_the_shift_pair(target):
    assert equals(w_region(S, S_STAR, target), OPEN_DISK)
    assert equals(w_region(S, S_STAR, target, WForm.ALT), OPEN_DISK)
    w1, w2 = w_parts(S, S_STAR, target)
    assert equals(w1, EMPTY)
    assert equals(w2, OPEN_DISK)


def test_intersection_spectrum_and_delta_for_the_shift_pair():
    assert equals(intersection_spectrum_region(S, S_STAR, CompletionTarget.FLI), CIRCLE)
    assert equals(delta_region(S, S_STAR, CompletionTarget.FLI), CIRCLE)
    assert equals(completable_region(S, S_STAR, CompletionTarget.FLI), complement(CIRCLE))
    assert equals(exceptional_region(S, S_STAR, CompletionTarget.FLI), DISK)
    assert equals(exceptional_region(S, S_STAR, CompletionTarget.FRI), OPEN_DISK)


def test_region_identities_refuse_the_invertible_target():
    with pytest.raises(PreconditionError):
        delta_region(S, S_STAR, CompletionTarget.INVERTIBLE)


# ------------------------------------------------------------------ checks


def test_tally_outcomes():
    assert Tally().verdict("x", "nothing").outcome == VerdictOutcome.EXACT
    sampled = Tally()
    sampled.record_sample(True, GQ(2), "sample point")
    assert sampled.verdict("x", "").outcome == VerdictOutcome.SAMPLED_PASS
    unknown = Tally()
    unknown.record_sample(None, GQ(2), "sample point")
    assert unknown.verdict("x", "").outcome == VerdictOutcome.INCONCLUSIVE
    failed = Tally()
    failed.record_sample(True, GQ(2), "sample point")
    failed.record_exact(False, "identity")
    assert failed.verdict("x", "").outcome == VerdictOutcome.FAIL


@pytest.mark.parametrize("target", [CompletionTarget.FLI, CompletionTarget.FRI])
def test_zero_corner_identities_are_exact(target):
    assert filling_holes_check(S, S_STAR, target=target).outcome == VerdictOutcome.EXACT
    assert sandwich_check(S, S_STAR, target=target).outcome == VerdictOutcome.EXACT
    assert eta_check(S, S_STAR, target=target).outcome == VerdictOutcome.EXACT
    assert corollary_consistency_check(S, S_STAR, target=target).outcome == VerdictOutcome.EXACT
    assert w_forms_check(S, S_STAR, target=target).outcome == VerdictOutcome.EXACT


def test_invertible_target_has_no_delta_formula():
    verdict = corollary_consistency_check(S, S_STAR, target=CompletionTarget.INVERTIBLE)
    assert verdict.outcome == VerdictOutcome.NOT_APPLICABLE


def test_corollaries_only_conclude_when_their_hypothesis_holds():
    assert dong_condition_verdict(S, S_STAR).outcome == VerdictOutcome.NOT_APPLICABLE
    verdict = dong_condition_verdict(S, S)
    assert verdict.outcome == VerdictOutcome.EXACT
    assert verdict.hypothesis_holds
    assert dong_condition_check(S, S)
    assert no_interior_corollary_verdict(S, S_STAR).outcome == VerdictOutcome.NOT_APPLICABLE
    assert no_interior_corollary_verdict(U, U).outcome == VerdictOutcome.EXACT


def test_s_class_proposition():
    assert s_class_proposition_verdict(S_STAR, S).outcome == VerdictOutcome.EXACT
    assert s_class_proposition_verdict(S, S_STAR).outcome == VerdictOutcome.NOT_APPLICABLE
    verdict = s_class_proposition_verdict(S_STAR, S, target=CompletionTarget.FRI)
    assert verdict.outcome == VerdictOutcome.EXACT


def test_boolean_forms_of_the_corollaries():
    diag = OperatorExpr.of(Atom(AtomKind.DIAG, values=((GQ(1), INF),)))
    assert dong_condition_check(diag, diag)
    assert s_class_proposition_check(S_STAR, S, CompletionTarget.FLI)
    # hypothesis fails, nothing is asserted
    assert no_interior_corollary_check(S, S_STAR, CompletionTarget.FLI)


def test_block_lemma_and_duality():
    assert block_lemma_check(S, S_STAR).outcome == VerdictOutcome.EXACT
    assert duality_check(S).outcome == VerdictOutcome.EXACT
    assert duality_check(OperatorExpr.of(Atom(AtomKind.USHIFT, GQ(1, 1), GQ(0, 1)))).passed


@pytest.mark.parametrize("target", list(CompletionTarget))
def test_constructed_corners_land_in_the_class(target):
    verdict = completion_soundness_check(S, S_STAR, target, samples=5, seed=3)
    assert verdict.outcome == VerdictOutcome.EXACT
    assert verdict.hypothesis_holds


def test_certificate_checks_never_fail_on_the_shift_pair():
    cert = fli_completable(S, S_STAR, ZERO_LAMBDA).certificate
    holes = filling_holes_check(S, S_STAR, cert, samples=3, seed=1, config=SMALL_CONFIG)
    assert holes.outcome != VerdictOutcome.FAIL
    assert any("certificate point" in step for step in holes.calculation_steps)
    block = block_lemma_check(S, S_STAR, cert, samples=2, seed=1, config=SMALL_CONFIG)
    assert block.outcome != VerdictOutcome.FAIL


def test_run_check_dispatch():
    assert run_check("delta", S, S_STAR).outcome == VerdictOutcome.EXACT
    assert run_check("duality", S).outcome == VerdictOutcome.EXACT
    with pytest.raises(KeyError):
        run_check("nope", S, S_STAR)
    with pytest.raises(PreconditionError):
        run_check("holes", S)
    with pytest.raises(PreconditionError):
        run_check("falsify", S, S_STAR_2)


def test_verification_engine_runs_every_pair_check():
    overview = VerificationEngine().run_all(S, S_STAR, samples=3, seed=0)
    names = [v.check for v in overview.verdicts]
    assert "holes" in names and "duality(A)" in names and "duality(B)" in names
    assert "falsify" not in names
    assert overview.all_passed


def test_verification_engine_invertible_subset():
    overview = VerificationEngine().run_all(S, S_STAR, CompletionTarget.INVERTIBLE, samples=3)
    assert [v.check for v in overview.verdicts] == [
        "completion", "block", "delta", "duality(A)", "duality(B)"]
    assert overview.all_passed


def test_falsifier_does_not_count_inconclusive_corners(monkeypatch):
    monkeypatch.setattr("backend.completion.theorem_checks.oracle_point_data", lambda *args: None)
    verdict = falsify_non_completable(S, S_STAR_2, ZERO_LAMBDA, config=SMALL_CONFIG)
    assert verdict.outcome == VerdictOutcome.INCONCLUSIVE
    assert verdict.samples == 0
    assert not verdict.passed


def test_verification_engine_falls_back_to_inconclusive(monkeypatch):
    def broken(name, *args, **kwargs):
        if name == "eta":
            raise RuntimeError("region engine unavailable")
        return run_check(name, *args, **kwargs)

    monkeypatch.setattr("backend.completion.verification_engine.run_check", broken)
    overview = VerificationEngine().run_all(S, S_STAR, samples=2, seed=0)
    [eta] = [v for v in overview.verdicts if v.check == "eta"]
    assert eta.outcome == VerdictOutcome.INCONCLUSIVE
    assert "region engine unavailable" in eta.explanation
    assert len(overview.verdicts) == len(PAIR_CHECKS) + 2
