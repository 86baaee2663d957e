from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from impactlab.errors import (DomainMismatch, EmptyInput, NegativeValue, NonDecreasingOrdinates,
                              NonMonotoneAbscissae, NonZeroTail, NotLarger, OutOfDomain, ResultNotDecreasing)
from impactlab.profile import (DiscreteProfile, PiecewiseLinear, average_curve, constant, extend_with_zeros,
                               from_counts, linear, pl_from_points, pl_max, pl_min, pointwise_combine, scale,
                               shift, to_continuous)

from . import oracles
from .conftest import pl_functions


@pytest.mark.parametrize(
    ("xs", "ys", "exc"),
    [
        ((), (), EmptyInput),
        ((0.0,), (1.0,), NonMonotoneAbscissae),
        ((0.0, 1.0), (1.0,), EmptyInput),
        ((0.5, 1.0), (1.0, 0.0), NonMonotoneAbscissae),
        ((0.0, 1.0, 1.0), (2.0, 1.0, 0.0), NonMonotoneAbscissae),
        ((0.0, 1.0), (1.0, 2.0), NonDecreasingOrdinates),
        ((0.0, 1.0), (1.0, -1.0), NegativeValue),
        ((0.0, 1.0), (float("nan"), 0.0), OutOfDomain),
    ],
)
def test_invalid_knots_rejected(xs, ys, exc):
    with pytest.raises(exc):
        PiecewiseLinear(xs, ys)


def test_evaluation_and_domain():
    Z = pl_from_points([(0, 10), (2, 4), (5, 1)])
    assert Z(0) == 10 and Z(2) == 4 and Z(5) == 1
    assert Z(1) == 7 and Z(3.5) == 2.5
    with pytest.raises(OutOfDomain):
        Z(5.5)
    with pytest.raises(OutOfDomain):
        Z(-0.1)


@given(pl_functions(), st.floats(0, 1))
def test_integral_matches_trapezoid_oracle(Z, u):
    x = u * Z.T
    assert Z.integral.eval(x) == pytest.approx(oracles.integral_at(Z, x), rel=1e-12, abs=1e-12)
    grid = np.linspace(0, Z.T, 33)
    assert np.allclose(Z.integral.eval_many(grid), oracles.integral_grid(Z, grid), rtol=1e-12, atol=1e-10)


@given(pl_functions(), st.floats(0.01, 1))
def test_average_curve_is_decreasing_and_bounded(Z, u):
    th = u * Z.T
    mu = average_curve(Z, th)
    assert Z(th) - 1e-9 <= mu <= Z.ys[0] + 1e-9
    assert average_curve(Z, 0) == Z.ys[0]
    assert average_curve(Z, th / 2) >= mu - 1e-9


def test_discrete_profile_and_embedding():
    p = from_counts([3, 10, 0, 7])
    assert p.counts == (10, 7, 3, 0) and p.T == 4 and p[1] == 10
    with pytest.raises(OutOfDomain):
        p[5]
    with pytest.raises(NonDecreasingOrdinates):
        DiscreteProfile((1, 2))
    with pytest.raises(NegativeValue):
        from_counts([1, -1])
    with pytest.raises(EmptyInput):
        from_counts([])
    Z = to_continuous(p)
    assert Z.xs == (0, 1, 2, 3, 4) and Z.ys == (10, 7, 3, 0, 0)
    # the step embedding integrates to the sum of counts on integer ranks
    assert Z.integral.total == pytest.approx(oracles.integral_at(Z, 4))


@given(pl_functions(T=5.0), pl_functions(T=5.0))
def test_envelopes_bracket_inputs(Z, Y):
    lo, hi = pl_min(Z, Y), pl_max(Z, Y)
    grid = np.linspace(0, 5, 201)
    zv, yv = oracles.value(Z, grid), oracles.value(Y, grid)
    assert np.allclose(oracles.value(lo, grid), np.minimum(zv, yv), atol=1e-9)
    assert np.allclose(oracles.value(hi, grid), np.maximum(zv, yv), atol=1e-9)
    assert pointwise_combine("min", Z, Y).same_as(lo)


def test_envelope_domain_mismatch():
    with pytest.raises(DomainMismatch):
        pl_min(linear(1, 1), linear(2, 1))


def test_shift_scale_and_extension():
    Z = linear(4, 8)
    assert shift(Z, 1).ys == (9, 1)
    with pytest.raises(ResultNotDecreasing):
        shift(Z, -1)
    clamped = shift(Z, -4, clamp=True)
    assert clamped(0) == 4 and clamped(2) == 0 and clamped(4) == 0
    assert scale(Z, 0.5).ys == (4, 0)
    with pytest.raises(ResultNotDecreasing):
        scale(Z, -1)
    ext = extend_with_zeros(Z, 6)
    assert ext.T == 6 and ext.integral.total == Z.integral.total
    with pytest.raises(NonZeroTail):
        extend_with_zeros(constant(1, 2), 3)
    with pytest.raises(NotLarger):
        extend_with_zeros(Z, 4)
