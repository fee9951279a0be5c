import random

import pytest
from hypothesis import given

from ldic.achievability import (DEFAULT_ORDER, ThetaTable, achievable_region_fm,
                                dropped_sum_terms, fm_project, kept_sum_terms, split_rate_system,
                                sumrate_simplification_holds, sumrate_simplification_valid,
                                theta_table)
from ldic.converse import capacity_region
from ldic.model import validate
from ldic.simulator import BitWord, feedback_signal, forward
from strategies import params


def test_theta_values():
    t = theta_table(validate((20, 15, 12, 13, 20, 15)))
    assert t(1, 1) == 12 and t(3, 1) == 0
    t = theta_table(validate((20, 15, 12, 13, 0, 0)))
    assert t(4, 1) == 7 and t(2, 1) == 20 and t(1, 1) == 0


@given(params(8))
def test_theta_without_own_feedback(p):
    assert theta_table(p.with_feedback(0, p.n22_fb))(1, 1) == 0


def _user2_levels_in_feedback1(p):
    """Levels of user 2 that reach transmitter 1 through receiver 1's feedback."""
    q = p.q
    count = 0
    for m in range(1, q + 1):
        y1, _ = forward(BitWord.zeros(q), BitWord.unit(m, q), p)
        if feedback_signal(y1, p, 1):
            count += 1
    return count


@given(params(7))
def test_theta1_counts_cross_bits_in_feedback(p):
    # with the direct link silenced, receiver 1 only hears user 2
    p = validate((0, p.n22_fwd, p.n12, p.n21, p.n11_fb, p.n22_fb))
    assert theta_table(p)(1, 1) == _user2_levels_in_feedback1(p)


@given(params(10))
def test_theta_identities(p):
    t = theta_table(p)
    for i, j in ((1, 2), (2, 1)):
        assert t(1, i) + t(3, i) == p.cross(i, j)
        assert t(5, i) == max(t(4, i), t(3, i))
        assert t(7, i) == max(t(3, i), t(6, i))
        assert all(t(l, i) >= 0 for l in range(1, 8))


@pytest.mark.parametrize("tup", [(20, 15, 12, 13, 15, 14), (10, 9, 2, 15, 0, 0),
                                 (10, 10, 3, 8, 9, 4), (7, 8, 15, 13, 11, 9)])
def test_fm_region_equals_capacity(tup):
    p = validate(tup)
    assert achievable_region_fm(theta_table(p)) == capacity_region(p)


def test_zero_table():
    zero = ThetaTable({(l, i): 0 for l in range(1, 8) for i in (1, 2)})
    assert achievable_region_fm(zero).vertices == ((0, 0),)
    assert fm_project(split_rate_system(zero)).vertices == ((0, 0),)


def test_split_system_shape():
    s = split_rate_system(theta_table(validate((20, 15, 12, 13, 20, 15))))
    assert len(s.rows) == 14
    assert all(c in (0, 1) for coef, _ in s for c in coef.values())


@pytest.mark.parametrize("tup", [(20, 15, 12, 13, 20, 15), (10, 10, 3, 8, 9, 4)])
def test_projection_examples(tup):
    p = validate(tup)
    s = split_rate_system(theta_table(p))
    assert fm_project(s) == achievable_region_fm(theta_table(p)) == capacity_region(p)


@given(params(8))
def test_projection_matches_closed_form(p):
    t = theta_table(p)
    assert fm_project(split_rate_system(t)) == achievable_region_fm(t)


def test_elimination_order_is_irrelevant():
    rng = random.Random(7)
    other = ("R2C1", "R1C1", "R2C2", "R1C2")
    for _ in range(40):
        s = split_rate_system(theta_table(validate([rng.randint(0, 8) for _ in range(6)])))
        assert fm_project(s, DEFAULT_ORDER) == fm_project(s, other)


def test_bad_order_rejected():
    s = split_rate_system(theta_table(validate((1,) * 6)))
    with pytest.raises(ValueError):
        fm_project(s, ("R1C1", "R1C2"))


def test_sum_terms_count():
    t = theta_table(validate((20, 15, 12, 13, 15, 14)))
    assert len(kept_sum_terms(t)) == 3 and len(dropped_sum_terms(t)) == 7


def test_literal_max_min_claim_is_too_strong():
    # a kept term exceeds a dropped term, yet the minimum is unchanged
    t = theta_table(validate((0, 0, 0, 1, 0, 0)))
    assert not sumrate_simplification_holds(t)
    assert sumrate_simplification_valid(t)
    assert sumrate_simplification_holds(theta_table(validate((0,) * 6)))


@given(params(10))
def test_three_term_sum_bound_is_exact(p):
    t = theta_table(p)
    assert sumrate_simplification_valid(t)
    assert min(kept_sum_terms(t)) == min(kept_sum_terms(t) + dropped_sum_terms(t))
