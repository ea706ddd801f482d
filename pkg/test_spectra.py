#!/usr/bin/env python3
"""
Tests for exact spectra of operator expressions
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings

from backend.models.numeric import GQ, INF, ExtNat
from backend.models.operator_models import Atom, AtomKind, OperatorExpr, direct_sum
from backend.operators.classifier import SpectrumKind, classify
from backend.operators.operator_engine import OperatorEngine
from backend.operators.spectra import eta_spectrum_equality, spectrum_region
from backend.region.region_ops import EMPTY, circle, closed_disk, equals, is_empty, open_disk, points
from hypothesis_strategies import exprs, gqs

S = OperatorExpr.of(Atom(AtomKind.USHIFT))
S_STAR = OperatorExpr.of(Atom(AtomKind.USHIFT_ADJ))
U = OperatorExpr.of(Atom(AtomKind.BSHIFT))
DISK = closed_disk(GQ(0), 1)
CIRCLE = circle(GQ(0), 1)


@pytest.mark.parametrize("kind,expected", [
    (SpectrumKind.SPEC, DISK),
    (SpectrumKind.LEFT, CIRCLE),
    (SpectrumKind.FLI, CIRCLE),
    (SpectrumKind.ESSENTIAL, CIRCLE),
    (SpectrumKind.RIGHT, DISK),
    (SpectrumKind.FRI, DISK),
    (SpectrumKind.DEFECT, DISK),
    (SpectrumKind.POINT, EMPTY),
])
def test_unilateral_shift_spectra(kind, expected):
    assert equals(spectrum_region(S, kind), expected)


@pytest.mark.parametrize("kind,expected", [
    (SpectrumKind.FLI, DISK),
    (SpectrumKind.FRI, CIRCLE),
    (SpectrumKind.POINT, open_disk(GQ(0), 1)),
    (SpectrumKind.RIGHT, CIRCLE),
])
def test_adjoint_shift_spectra_mirror_the_shift(kind, expected):
    assert equals(spectrum_region(S_STAR, kind), expected)


def test_bilateral_shift_spectrum_is_the_circle():
    for kind in (SpectrumKind.SPEC, SpectrumKind.ESSENTIAL, SpectrumKind.FLI, SpectrumKind.FRI):
        assert equals(spectrum_region(U, kind), CIRCLE)


def test_shift_plus_adjoint_is_fredholm_of_index_zero_inside():
    t = direct_sum(S, S_STAR)
    assert equals(spectrum_region(t, SpectrumKind.SPEC), DISK)
    assert equals(spectrum_region(t, SpectrumKind.ESSENTIAL), CIRCLE)


def test_diagonal_spectra_are_finite_sets():
    d = OperatorExpr.of(
        Atom(AtomKind.BSHIFT, GQ(5)),
        Atom(AtomKind.DIAG, values=((GQ(0), ExtNat(2)), (GQ(1, 1), INF))),
    )
    assert equals(spectrum_region(d, SpectrumKind.POINT), points(GQ(0), GQ(1, 1)))
    assert equals(spectrum_region(d, SpectrumKind.ESSENTIAL), points(GQ(1, 1)) | circle(GQ(5), 1))


def test_affine_shift_moves_the_spectrum():
    t = OperatorExpr.of(Atom(AtomKind.USHIFT, GQ(1), GQ(0, 2)))
    assert equals(spectrum_region(t, SpectrumKind.SPEC), closed_disk(GQ(1), 4))
    assert equals(spectrum_region(t, SpectrumKind.LEFT), circle(GQ(1), 4))


@settings(max_examples=40, deadline=None)
@given(exprs(), gqs(3, 2))
def test_region_membership_agrees_with_pointwise_classes(expr, lam):
    for kind in (SpectrumKind.SPEC, SpectrumKind.FLI, SpectrumKind.FRI, SpectrumKind.USF):
        assert spectrum_region(expr, kind).member(lam) == (not classify(expr, lam, kind))


@settings(max_examples=25, deadline=None)
@given(exprs(max_atoms=2))
def test_left_and_right_fredholm_spectra_share_their_hull(expr):
    assert eta_spectrum_equality(expr)


@settings(max_examples=25, deadline=None)
@given(exprs(max_atoms=2))
def test_fli_spectrum_lies_in_the_spectrum(expr):
    spec = spectrum_region(expr, SpectrumKind.SPEC)
    fli = spectrum_region(expr, SpectrumKind.FLI)
    assert is_empty(fli - spec)


def test_engine_reports_for_the_shift():
    engine = OperatorEngine()
    report = engine.spectrum(S, SpectrumKind.FRI)
    assert report["kind"] == "fri"
    assert report["bounded"] is True
    assert report["cell_counts"]["face"] == 2
    classified = engine.classify(S, GQ(Fraction(1, 2)), SpectrumKind.FLI)
    assert classified["classes"]["fli"] is True
    assert classified["classes"]["fri"] is False
    assert classified["index"] == "-1"
