import numpy as np
import pytest
from hypothesis import given, strategies as st

from ifnls import (tnorm, tconorm, eval_tnorm, eval_tconorm,
                   check_algebra_axioms, separation_witness, diagonal_witness,
                   idempotency_report, WitnessNotFound)
from ifnls.algebra import TriangularNorm

units = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)

MIN, PROD, LUK = tnorm("min"), tnorm("product"), tnorm("lukasiewicz")
MAX, PSUM, BSUM = tconorm("max"), tconorm("probsum"), tconorm("boundedsum")


def test_min_evaluation():
    assert eval_tnorm(MIN, 0.3, 0.7) == 0.3


def test_max_evaluation():
    assert eval_tconorm(MAX, 0.3, 0.7) == 0.7


def test_lukasiewicz_hand_value():
    # max(0, 0.6 + 0.7 - 1) = 0.3
    assert eval_tnorm(LUK, 0.6, 0.7) == pytest.approx(0.3, abs=1e-12)


def test_bounded_sum_hand_value():
    # min(1, 0.6 + 0.7) = 1.0
    assert eval_tconorm(BSUM, 0.6, 0.7) == 1.0


@given(units)
def test_tnorm_identity_is_one(a):
    assert eval_tnorm(MIN, a, 1.0) == a
    assert eval_tnorm(PROD, a, 1.0) == a


@given(units)
def test_tconorm_identity_is_zero(a):
    assert eval_tconorm(MAX, a, 0.0) == a
    assert eval_tconorm(PSUM, a, 0.0) == a


dyadics = st.sampled_from([i / 1024.0 for i in range(1025)])


@given(dyadics, dyadics)
def test_min_max_duality_exact_on_dyadics(a, b):
    # s(a, b) = 1 - t(1 - a, 1 - b); exact where 1 - a carries no rounding
    assert eval_tconorm(MAX, a, b) == 1.0 - eval_tnorm(MIN, 1.0 - a, 1.0 - b)


@given(units, units)
def test_min_max_duality_general(a, b):
    lhs = eval_tconorm(MAX, a, b)
    rhs = 1.0 - eval_tnorm(MIN, 1.0 - a, 1.0 - b)
    assert lhs == pytest.approx(rhs, abs=1e-15)


@given(units, units)
def test_results_stay_in_unit_interval(a, b):
    for op in (MIN, PROD, LUK):
        assert 0.0 <= eval_tnorm(op, a, b) <= 1.0
    for op in (MAX, PSUM, BSUM):
        assert 0.0 <= eval_tconorm(op, a, b) <= 1.0


def test_unit_range_rejected():
    with pytest.raises(ValueError):
        eval_tnorm(MIN, -0.1, 0.5)
    with pytest.raises(ValueError):
        eval_tconorm(MAX, 0.5, 1.1)


def _grid_axiom_oracle(op, identity_value, n=11, eps=1e-12):
    """Exhaustive axiom check on an n-point grid, independent of sampling."""
    grid = np.linspace(0.0, 1.0, n)
    for a in grid:
        if abs(op(a, identity_value) - a) > eps:
            return False
        for b in grid:
            if abs(op(a, b) - op(b, a)) > eps:
                return False
            for c in grid:
                if abs(op(op(a, b), c) - op(a, op(b, c))) > eps:
                    return False
                if a <= c and op(a, b) > op(c, b) + eps:  # monotone, 1st arg
                    return False
    return True


@pytest.mark.parametrize("t,s", [(MIN, MAX), (PROD, PSUM)])
def test_axiom_checker_agrees_with_grid_oracle(t, s):
    assert _grid_axiom_oracle(t, 1.0)
    assert _grid_axiom_oracle(s, 0.0)
    verdict = check_algebra_axioms(t, s, samples=1000, seed=7)
    assert verdict.passed


def test_axiom_checker_catches_broken_operator():
    # a - b clipped to [0, 1] is not commutative: 0.2 * 0.1 != 0.1 * 0.2
    broken = TriangularNorm("broken", lambda a, b: np.clip(a - b, 0.0, 1.0))
    verdict = check_algebra_axioms(broken, MAX, samples=500, seed=3)
    assert verdict.failed
    assert verdict.witness["law"] == "commutativity"


def test_separation_witness_min_max():
    r3, r4 = separation_witness(MIN, MAX, 0.8, 0.5)
    assert min(0.8, r3) > 0.5
    assert max(r4, 0.5) < 0.8


def test_separation_witness_min_max_easy_levels():
    r3, r4 = separation_witness(MIN, MAX, 0.9, 0.1)
    assert min(0.9, r3) > 0.1
    assert max(r4, 0.1) < 0.9
    assert r3 > 0.1  # any such witness must clear the lower level


def test_separation_witness_product_needs_large_r3():
    # 0.8 * r3 > 0.5 forces r3 > 0.625
    r3, r4 = separation_witness(PROD, PSUM, 0.8, 0.5)
    assert 0.8 * r3 > 0.5
    assert r3 > 0.625
    assert r4 + 0.5 - r4 * 0.5 < 0.8


def test_separation_witness_validates_order():
    with pytest.raises(ValueError):
        separation_witness(MIN, MAX, 0.5, 0.8)


def test_diagonal_witness_min_max():
    r6, r7 = diagonal_witness(MIN, MAX, 0.5)
    assert min(r6, r6) >= 0.5
    assert max(r7, r7) <= 0.5


def test_diagonal_witness_product_solves_square():
    # r6^2 >= 0.49 forces r6 >= 0.7
    r6, r7 = diagonal_witness(PROD, PSUM, 0.49)
    assert r6 * r6 >= 0.49
    assert r6 >= 0.7 - 1e-9
    assert 2 * r7 - r7 * r7 <= 0.49


def test_diagonal_witness_near_one():
    r6, r7 = diagonal_witness(MIN, MAX, 0.99)
    assert r6 >= 0.99
    assert r7 <= 0.99


def test_witness_not_found_for_degenerate_operator():
    # The drastic product never exceeds 0 off the identity row, so no r3
    # can push min-combination above a positive level.
    drastic = TriangularNorm(
        "drastic", lambda a, b: np.where(np.maximum(a, b) >= 1.0,
                                         np.minimum(a, b), 0.0))
    with pytest.raises(WitnessNotFound):
        separation_witness(drastic, MAX, 0.8, 0.5)


def test_idempotency_detector():
    assert idempotency_report(MIN, MAX).passed
    verdict = idempotency_report(PROD, PSUM)
    assert verdict.failed
    w = verdict.witness
    # the detector must exhibit a concrete non-idempotent point
    assert abs(w["point"] - w["value"]) > 1e-9
