import math

import numpy as np
import pytest

from fuzzysoft import make_piecewise, left_shoulder, right_shoulder, triangle


def test_old_age_saturates_above_last_node():
    old = right_shoulder(50, 65)
    assert old.evaluate(82) == 1.0
    assert old.evaluate(65) == 1.0
    assert old.evaluate(50) == 0.0
    assert old.evaluate(40) == 0.0


def test_mild_age_falling_branch():
    mild = triangle(30, 45, 60)
    assert mild.evaluate(49) == pytest.approx(11 / 15)  # 0.7333


def test_left_tail_below_support():
    high_leptin = triangle(40, 55, 70)
    assert high_leptin.evaluate(10) == 0.0


def test_normal_insulin_rising_branch():
    normal = triangle(3, 6.5, 10)
    assert normal.evaluate(5.66) == pytest.approx(0.76)


def test_valid_shoulder_from_raw_nodes():
    old = make_piecewise([(50, 0), (65, 1)], left_tail=0, right_tail=1)
    assert old.evaluate(80) == 1.0
    assert old.evaluate(57.5) == pytest.approx(0.5)


@pytest.mark.parametrize(
    "nodes,tails",
    [
        ([(5, 1), (5, 0)], (0, 0)),      # duplicate x
        ([(10, 0), (5, 1)], (0, 0)),     # decreasing x
        ([(0, 1.5)], (0, 0)),            # degree out of range
        ([(0, -0.1)], (0, 0)),           # degree below range
        ([], (0, 0)),                    # no nodes
        ([(0, 1)], (2, 0)),              # left tail out of range
        ([(0, 1)], (0, -1)),             # right tail out of range
    ],
)
def test_construction_rejects_bad_input(nodes, tails):
    with pytest.raises(ValueError):
        make_piecewise(nodes, *tails)


def test_evaluate_rejects_non_finite():
    mf = triangle(0, 1, 2)
    for bad in (float("nan"), float("inf"), -float("inf")):
        with pytest.raises(ValueError):
            mf.evaluate(bad)


def test_node_values_are_exact():
    mf = make_piecewise([(1, 0.25), (2, 0.75), (4, 0.5)])
    for x, y in mf.nodes:
        assert mf.evaluate(x) == y


def test_sample_endpoints_are_node_values():
    old = right_shoulder(50, 65)
    assert old.sample(50, 65, 2) == [(50.0, 0.0), (65.0, 1.0)]


def test_sample_matches_evaluate_exactly():
    child = left_shoulder(5, 15)
    for x, y in child.sample(0, 20, 5):
        assert y == child.evaluate(x)


def test_sample_rejects_bad_ranges():
    mf = triangle(0, 1, 2)
    with pytest.raises(ValueError):
        mf.sample(5, 5, 2)
    with pytest.raises(ValueError):
        mf.sample(3, 1, 2)
    with pytest.raises(ValueError):
        mf.sample(0, 1, 1)


def test_degrees_always_within_unit_interval():
    mf = make_piecewise([(0, 0.2), (1, 1.0), (3, 0.0), (7, 0.8)], left_tail=0.5, right_tail=0.1)
    xs = np.linspace(-5, 12, 400)
    ys = mf.evaluate_many(xs)
    assert ys.min() >= 0.0 and ys.max() <= 1.0


def test_piecewise_continuity_between_nodes():
    # within the node span, small steps in x give small steps in degree
    mf = triangle(10, 25, 40)
    xs = np.linspace(10, 40, 10001)
    ys = mf.evaluate_many(xs)
    assert np.abs(np.diff(ys)).max() < 1e-2


def test_monotone_between_first_and_last_node():
    rising = make_piecewise([(0, 0.0), (2, 0.3), (5, 0.9), (6, 1.0)])
    xs = np.linspace(0, 6, 500)
    ys = rising.evaluate_many(xs)
    assert np.all(np.diff(ys) >= -1e-12)


def test_functions_are_immutable():
    mf = triangle(0, 1, 2)
    with pytest.raises(Exception):
        mf.left_tail = 0.5  # type: ignore[misc]


def test_single_node_function():
    mf = make_piecewise([(5, 0.7)], left_tail=0.0, right_tail=1.0)
    assert mf.evaluate(5) == 0.7
    assert mf.evaluate(4.9) == 0.0
    assert mf.evaluate(5.1) == 1.0
    assert math.isclose(mf.evaluate(5.0), 0.7)
