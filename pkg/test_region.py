#!/usr/bin/env python3
"""
Tests for the region algebra: membership, boolean laws, topology and grids
"""
import io
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from backend.models.numeric import GQ
from backend.region.region_ops import (
    EMPTY, PLANE, RegionExpr, cells, circle, closed_disk, complement, components, equals, eta, holes,
    hull, interior_is_empty, intersect, is_bounded, is_empty, is_subset, open_disk, points,
    sample_grid, union, write_pgm,
)
from backend.utils.errors import RegionError
from hypothesis_strategies import basic_regions, regions

ORIGIN = GQ(0)
UNIT_DISK = closed_disk(ORIGIN, 1)
ANNULUS = closed_disk(ORIGIN, 4) - open_disk(ORIGIN, 1)


def test_exact_membership_on_the_circle():
    assert circle(ORIGIN, 1).member(GQ(Fraction(3, 5), Fraction(4, 5)))
    assert not open_disk(ORIGIN, 1).member(GQ(Fraction(3, 5), Fraction(4, 5)))
    assert UNIT_DISK.member(GQ(Fraction(3, 5), Fraction(4, 5)))
    assert not UNIT_DISK.member(GQ(Fraction(3, 5), Fraction(81, 100)))


def test_points_and_constants():
    assert points(GQ(1), GQ(0, 1)).member(GQ(0, 1))
    assert not points(GQ(1)).member(GQ(0))
    assert is_empty(EMPTY)
    assert not is_empty(PLANE)
    assert is_empty(circle(ORIGIN, 1) & points(GQ(2)))


@settings(max_examples=200, deadline=None)
@given(regions(), regions())
def test_de_morgan(r1, r2):
    assert equals(complement(union(r1, r2)), intersect(complement(r1), complement(r2)))


@settings(max_examples=100, deadline=None)
@given(regions())
def test_union_and_intersection_are_idempotent(r):
    assert equals(union(r, r), r)
    assert equals(intersect(r, r), r)
    assert equals(complement(complement(r)), r)


@settings(max_examples=25, deadline=None)
@given(st.builds(union, basic_regions(), basic_regions()))
def test_hull_is_idempotent_and_contains_the_region(r):
    filled = eta(r)
    assert is_subset(r, filled)
    assert equals(eta(filled), filled)


def test_annulus_topology():
    [only] = components(ANNULUS)
    assert equals(only, ANNULUS)
    assert equals(holes(ANNULUS), open_disk(ORIGIN, 1))
    assert equals(eta(ANNULUS), closed_disk(ORIGIN, 4))
    assert len(hull(ANNULUS).holes) == 1


def test_circle_hull_is_the_closed_disk():
    assert equals(eta(circle(ORIGIN, 1)), UNIT_DISK)
    assert interior_is_empty(circle(ORIGIN, 1))
    assert not interior_is_empty(ANNULUS)


def test_disjoint_disks_are_separate_components():
    two = closed_disk(GQ(-3), 1) | closed_disk(GQ(3), 1)
    assert len(components(two)) == 2
    assert is_empty(holes(two))


def test_tangent_disks_touch_in_one_component():
    two = closed_disk(GQ(-1), 1) | closed_disk(GQ(1), 1)
    assert len(components(two)) == 1
    assert len(components(open_disk(GQ(-1), 1) | open_disk(GQ(1), 1))) == 2


def test_boundedness():
    assert is_bounded(ANNULUS)
    assert not is_bounded(complement(UNIT_DISK))
    with pytest.raises(RegionError):
        eta(complement(UNIT_DISK))


def test_region_json():
    restored = RegionExpr.from_json(ANNULUS.to_json())
    assert equals(restored, ANNULUS)
    assert restored.member(GQ(Fraction(3, 2)))


def test_sample_grid_and_pgm():
    grid = sample_grid(UNIT_DISK, (GQ(-1, -1), GQ(1, 1)), 3)
    expected = np.array([[False, True, False],
                         [True, True, True],
                         [False, True, False]])
    assert np.array_equal(grid, expected)
    out = io.BytesIO()
    write_pgm(grid, out)
    data = out.getvalue()
    assert data.startswith(b"P5\n3 3\n255\n")
    assert len(data) == len(b"P5\n3 3\n255\n") + 9
    assert data[-1] == 0


def test_sample_grid_rejects_bad_windows():
    with pytest.raises(RegionError):
        sample_grid(UNIT_DISK, (GQ(1, 1), GQ(-1, -1)), 4)
    with pytest.raises(RegionError):
        sample_grid(UNIT_DISK, (GQ(-1, -1), GQ(1, 1)), 0)


@settings(max_examples=50, deadline=None)
@given(regions())
def test_cell_labels_agree_with_pointwise_membership(r):
    decomp = cells([r])
    for cell in decomp.cells:
        if cell.sample is not None:
            assert decomp.label(cell) == r.member(cell.sample)
