from fractions import Fraction as F

import pytest
from hypothesis import given

import oracles
from ldic.converse import capacity_region, converse_bounds, no_feedback
from ldic.gains import (feedback_thresholds, gain_report, gain_surface, individual_gain,
                        metric_curve, sum_gain)
from ldic.geometry import sup_linear
from ldic.model import validate
from strategies import params


def rows(p):
    return [h.primitive() for h in converse_bounds(p).halfplanes()]


@pytest.mark.parametrize("tup,expected", [
    ((20, 15, 12, 13, 15, 14), (2, 2, 0)),
    ((20, 15, 12, 13, 20, 15), (7, F(7, 2), 0)),
    ((10, 10, 3, 8, 9, 4), (1, 1, 1)),
    ((10, 10, 3, 8, 10, 10), (2, 2, 1)),
    ((10, 20, 6, 12, 10, 20), (3, 6, 0)),
    ((7, 8, 15, 13, 11, 9), (2, 3, 0)),
    ((7, 8, 15, 13, 15, 13), (6, 5, 0)),
])
def test_reference_values(tup, expected):
    r = gain_report(validate(tup))
    assert (r.delta1, r.delta2, r.sigma) == expected


def test_delta2_with_partial_feedback_follows_region():
    # without feedback (10,4) is a corner; with it the corner moves to (10,7)
    p = validate((10, 20, 6, 12, 10, 11))
    assert str(capacity_region(no_feedback(p))) == "(0,0) (10,0) (10,4) (4,16) (0,20)"
    assert str(capacity_region(p)) == "(0,0) (10,0) (10,7) (7,13) (0,20)"
    r = gain_report(p)
    assert (r.delta1, r.delta2, r.sigma) == (F(3, 2), 3, 0)


def test_witnesses():
    r = gain_report(validate((20, 15, 12, 13, 20, 15)))
    assert r.argmax_rj_for_delta1 == 15 and r.argmax_rj_for_delta2 == 7


@given(params(8))
def test_no_feedback_no_gain(p):
    r = gain_report(no_feedback(p))
    assert (r.delta1, r.delta2, r.sigma) == (0, 0, 0)


@given(params(8))
def test_delta_matches_dense_scan(p):
    base = no_feedback(p)
    vmax = (capacity_region(base).axis_max(2), capacity_region(base).axis_max(1))
    for i in (1, 2):
        value, witness = individual_gain(p, i)
        assert value == oracles.gain_scan(rows(p), rows(base), i, vmax[i - 1])
        j = 2 if i == 1 else 1
        # the witness attains the maximum
        assert oracles.slice_max(rows(p), j, witness) - oracles.slice_max(rows(base), j, witness) == value


@given(params(8))
def test_sigma_matches_vertex_oracle(p):
    xmax, ymax = F(max(p.n11_fwd, p.n21)), F(max(p.n22_fwd, p.n12))
    with_fb = oracles.region_vertices(rows(p), xmax, ymax)
    without = oracles.region_vertices(rows(no_feedback(p)), xmax, ymax)
    assert sum_gain(p) == oracles.sup_linear(with_fb, 1, 1) - oracles.sup_linear(without, 1, 1)


@given(params(8))
def test_gains_non_negative(p):
    r = gain_report(p)
    assert min(r.delta1, r.delta2, r.sigma) >= 0
    assert r.sigma == sup_linear(capacity_region(p), 1, 1) - sup_linear(
        capacity_region(no_feedback(p)), 1, 1)


def test_bad_user():
    with pytest.raises(ValueError):
        individual_gain(validate((1,) * 6), 0)


def test_surface_layout_and_workers():
    grid = gain_surface((20, 15, 12, 13), range(0, 21, 5), range(0, 16, 5))
    assert len(grid) == 5 and len(grid[0]) == 4
    cell = grid[4][3]
    assert (cell.subject.n11_fb, cell.subject.n22_fb) == (20, 15)
    assert (cell.delta1, cell.delta2, cell.sigma) == (7, F(7, 2), 0)
    par = gain_surface((20, 15, 12, 13), range(0, 21, 5), range(0, 16, 5), workers=2)
    assert [[c.delta1 for c in row] for row in par] == [[c.delta1 for c in row] for row in grid]


def test_column_without_second_feedback_is_zero():
    grid = gain_surface((10, 20, 6, 12), range(0, 11), range(0, 1))
    assert all((r[0].delta1, r[0].delta2, r[0].sigma) == (0, 0, 0) for r in grid)


@pytest.mark.parametrize("base,side,metric,expected", [
    ((20, 15, 12, 13), 1, "any", 13),
    ((20, 15, 12, 13), 2, "any", 12),
    ((10, 10, 3, 8), 1, "any", 8),
    ((10, 10, 3, 8), 2, "any", 3),
    ((10, 20, 6, 12), 1, "any", None),
    ((10, 20, 6, 12), 2, "any", 8),
    ((7, 8, 15, 13), 1, "any", 8),
    ((7, 8, 15, 13), 2, "any", 7),
    ((7, 8, 15, 13), 1, "delta1", None),
    ((7, 8, 15, 13), 2, "delta2", None),
])
def test_thresholds(base, side, metric, expected):
    assert feedback_thresholds(base, side, metric) == expected


def test_curve_shape():
    curve = metric_curve((20, 15, 12, 13), 1, "delta1")
    assert len(curve) == 21 and curve[:14] == [0] * 14 and all(v > 0 for v in curve[14:])
    with pytest.raises(ValueError):
        metric_curve((20, 15, 12, 13), 1, "bogus")
