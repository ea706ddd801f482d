#!/usr/bin/env python3
"""
Tests for the invertibility classes, completion criteria and the S± classes
"""
from fractions import Fraction

import pytest

from backend.models.numeric import GQ, INF, ZERO, ExtNat
from backend.models.operator_models import Atom, AtomKind, OperatorExpr, PointData
from backend.operators.classifier import (
    BetaConvention, CompletionCriterion, SClassSign, SpectrumKind, beta_of, classify,
    classify_point_data, fli_conditions, fri_conditions, invertible_conditions,
    resolvent_condition, s_class_membership, s_class_violations,
)

S = OperatorExpr.of(Atom(AtomKind.USHIFT))
S_STAR = OperatorExpr.of(Atom(AtomKind.USHIFT_ADJ))
U = OperatorExpr.of(Atom(AtomKind.BSHIFT))

ONE = ExtNat(1)
FREDHOLM_LEFT = PointData(ZERO, ONE, True)      # S at 0
FREDHOLM_RIGHT = PointData(ONE, ZERO, True)     # S* at 0
NOT_CLOSED = PointData(ZERO, ZERO, False)       # S on the circle


def test_injective_with_closed_range_is_left_invertible():
    assert classify_point_data(FREDHOLM_LEFT, SpectrumKind.LEFT)
    assert not classify_point_data(FREDHOLM_LEFT, SpectrumKind.RIGHT)
    assert classify_point_data(FREDHOLM_LEFT, SpectrumKind.FLI)
    assert not classify_point_data(FREDHOLM_LEFT, SpectrumKind.FRI)
    assert classify_point_data(FREDHOLM_LEFT, SpectrumKind.ESSENTIAL)
    assert not classify_point_data(FREDHOLM_LEFT, SpectrumKind.SPEC)


def test_surjective_is_right_invertible():
    assert classify_point_data(FREDHOLM_RIGHT, SpectrumKind.FRI)
    assert classify_point_data(FREDHOLM_RIGHT, SpectrumKind.DEFECT)
    assert not classify_point_data(FREDHOLM_RIGHT, SpectrumKind.POINT)
    assert not classify_point_data(FREDHOLM_RIGHT, SpectrumKind.FLI)


def test_non_closed_range_is_never_semi_fredholm():
    for kind in (SpectrumKind.USF, SpectrumKind.LSF, SpectrumKind.ESSENTIAL,
                 SpectrumKind.LEFT, SpectrumKind.FLI, SpectrumKind.SPEC):
        assert not classify_point_data(NOT_CLOSED, kind), kind
    assert classify_point_data(NOT_CLOSED, SpectrumKind.POINT)


def test_infinite_nullity_is_upper_but_not_fredholm():
    p = PointData(INF, ZERO, True)
    assert classify_point_data(p, SpectrumKind.LSF)
    assert not classify_point_data(p, SpectrumKind.USF)
    assert not classify_point_data(p, SpectrumKind.FRI)
    assert classify_point_data(p, SpectrumKind.RIGHT)


@pytest.mark.parametrize("kind", list(SpectrumKind))
def test_invertible_points_are_good_for_every_class(kind):
    assert classify_point_data(PointData(ZERO, ZERO, True), kind)


def test_classify_on_expressions():
    assert classify(S, GQ(0), SpectrumKind.LEFT)
    assert not classify(S, GQ(Fraction(1, 2)), SpectrumKind.RIGHT)
    assert classify(S_STAR, GQ(Fraction(1, 2)), SpectrumKind.RIGHT)
    assert not classify(U, GQ(0, 1), SpectrumKind.ESSENTIAL)
    assert classify(U, GQ(0), SpectrumKind.SPEC)


def test_beta_conventions_differ_only_off_closed_range():
    assert beta_of(NOT_CLOSED, BetaConvention.ALGEBRAIC) == INF
    assert beta_of(NOT_CLOSED, BetaConvention.CLOSURE) == ZERO
    assert beta_of(FREDHOLM_LEFT, BetaConvention.ALGEBRAIC) == ONE


def test_shift_pair_is_completable_at_zero():
    # (S, S*) at 0: nullity of B matches the deficiency of A
    assert all(fli_conditions(FREDHOLM_LEFT, FREDHOLM_RIGHT).values())
    assert all(fri_conditions(FREDHOLM_LEFT, FREDHOLM_RIGHT).values())
    assert all(invertible_conditions(FREDHOLM_LEFT, FREDHOLM_RIGHT).values())
    for which in CompletionCriterion:
        assert resolvent_condition(S, S_STAR, GQ(0), which)


def test_fli_criterion_rejects_mismatched_dimensions():
    big_kernel = PointData(ExtNat(2), ZERO, True)
    conditions = fli_conditions(FREDHOLM_LEFT, big_kernel)
    assert conditions["a"] and conditions["b"]
    assert not conditions["c"]
    assert not invertible_conditions(FREDHOLM_LEFT, big_kernel)["c"]


def test_fli_criterion_accepts_both_infinite():
    pa = PointData(ZERO, INF, True)
    pb = PointData(INF, ZERO, True)
    assert all(fli_conditions(pa, pb).values())
    assert invertible_conditions(pa, pb)["c"]


def test_resolvent_fails_on_the_circle():
    assert not resolvent_condition(S, S_STAR, GQ(1), CompletionCriterion.FLI)
    assert not resolvent_condition(S, S_STAR, GQ(0, -1), CompletionCriterion.INVERTIBLE)


def test_shift_classes():
    assert s_class_membership(S, SClassSign.MINUS, BetaConvention.ALGEBRAIC)
    assert s_class_membership(S, SClassSign.MINUS, BetaConvention.CLOSURE)
    assert not s_class_membership(S, SClassSign.PLUS, BetaConvention.CLOSURE)
    assert s_class_membership(S_STAR, SClassSign.PLUS, BetaConvention.CLOSURE)
    assert s_class_membership(U, SClassSign.PLUS, BetaConvention.CLOSURE)
    assert s_class_membership(U, SClassSign.MINUS, BetaConvention.CLOSURE)


def test_violations_name_the_offending_data():
    found = s_class_violations(S, SClassSign.PLUS, BetaConvention.CLOSURE)
    assert found
    assert all(data.alpha < beta_of(data, BetaConvention.CLOSURE) for _, data in found)


def test_algebraic_beta_breaks_plus_class_on_the_circle():
    # S* on the circle: α = 0 but β = ∞ algebraically
    assert not s_class_membership(S_STAR, SClassSign.PLUS, BetaConvention.ALGEBRAIC)
