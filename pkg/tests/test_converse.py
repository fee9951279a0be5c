import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given

import oracles
from ldic.converse import (capacity_region, converse_bounds, no_feedback, one_sided_perfect,
                           outer_box, perfect_feedback, perfect_level)
from ldic.geometry import subset
from ldic.model import validate
from strategies import params


def test_bounds_without_feedback():
    b = converse_bounds(validate((20, 15, 12, 13, 0, 0)))
    assert (b.r1_bound, b.r2_bound, b.sum_bound_cutset, b.sum_bound_fb,
            b.two_r1_plus_r2, b.r1_plus_two_r2) == (20, 15, 22, 25, 40, 30)


def test_region_without_feedback():
    r = capacity_region(validate((20, 15, 12, 13, 0, 0)))
    assert str(r) == "(0,0) (20,0) (18,4) (14,8) (0,15)"


def test_region_perfect_feedback():
    p = validate((20, 15, 12, 13, 20, 15))
    b = converse_bounds(p)
    assert (b.two_r1_plus_r2, b.r1_plus_two_r2) == (43, 37)
    assert str(capacity_region(p)) == "(0,0) (20,0) (20,2) (7,15) (0,15)"


def test_feedback_does_not_help_in_example_five():
    a = capacity_region(validate((10, 9, 2, 15, 0, 0)))
    b = capacity_region(validate((10, 9, 2, 15, 10, 15)))
    assert a == b
    assert str(a) == "(0,0) (10,0) (10,5) (6,9) (0,9)"


def test_degenerate_channel_is_a_point():
    assert capacity_region(validate((0, 0, 0, 0, 5, 5))).vertices == ((0, 0),)


def test_special_cases():
    p = validate((20, 15, 12, 13, 3, 4))
    assert perfect_level(p, 1) == 20 and perfect_level(p, 2) == 15
    assert perfect_feedback(p).as_tuple() == (20, 15, 12, 13, 20, 15)
    assert no_feedback(p).as_tuple()[4:] == (0, 0)
    assert one_sided_perfect(p, 2).as_tuple()[4:] == (0, 15)
    with pytest.raises(ValueError):
        one_sided_perfect(p, 3)


@given(params(10))
def test_vertices_match_grid_oracle(p):
    rows = [h.primitive() for h in converse_bounds(p).halfplanes()]
    x, y = outer_box(p)
    assert list(capacity_region(p).vertices) == oracles.region_vertices(rows, F(x), F(y))


@given(params(10))
def test_region_inside_outer_box(p):
    x, y = outer_box(p)
    r = capacity_region(p)
    assert r.axis_max(1) <= x and r.axis_max(2) <= y


@given(params(10))
def test_feedback_monotone(p):
    c = capacity_region(p)
    assert subset(capacity_region(no_feedback(p)), c)
    assert subset(c, capacity_region(perfect_feedback(p)))


@given(params(10))
def test_saturation(p):
    top = perfect_feedback(p)
    beyond = p.with_feedback(top.n11_fb + 3, top.n22_fb + 1)
    assert capacity_region(beyond) == capacity_region(top)


@given(params(10))
def test_index_symmetry(p):
    assert capacity_region(p.swapped()) == capacity_region(p).mirrored()


def test_monotone_in_each_feedback_exhaustive_small():
    for tup in itertools.product(range(4), repeat=6):
        p = validate(tup)
        c = capacity_region(p)
        assert subset(c, capacity_region(p.with_feedback(p.n11_fb + 1, p.n22_fb)))
        assert subset(c, capacity_region(p.with_feedback(p.n11_fb, p.n22_fb + 1)))
