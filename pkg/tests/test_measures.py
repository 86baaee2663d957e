from __future__ import annotations

import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from impactlab.errors import OutOfDomain, Undefined
from impactlab.measures import (MeasureKind, a_index, avg_of_avgs, discrete_measures, evaluate_discrete,
                                evaluate_measure, g_measure, h_measure, localization, parse_measure, percentile,
                                r_index, truncated)
from impactlab.profile import constant, from_counts, linear, pl_from_points, to_continuous, zero

from . import oracles
from .conftest import pl_functions

thetas = st.sampled_from([0.25, 0.5, 1.0, 2.0, 3.0])


@given(pl_functions(), thetas)
def test_h_matches_bisection(Z, th):
    ref = oracles.h_oracle(Z, th)
    if ref is None:
        with pytest.raises(Undefined):
            h_measure(Z, th)
    else:
        assert h_measure(Z, th) == pytest.approx(ref, abs=1e-9)


@given(pl_functions(), thetas)
def test_g_matches_bisection(Z, th):
    ref = oracles.g_oracle(Z, th)
    if ref is None:
        with pytest.raises(Undefined):
            g_measure(Z, th)
    else:
        assert g_measure(Z, th) == pytest.approx(ref, abs=1e-9)


@given(pl_functions(), thetas)
def test_g_at_least_h(Z, th):
    """Where both are defined, averaging never loses ground: g ≥ h."""
    try:
        h, g = h_measure(Z, th), g_measure(Z, th)
    except Undefined:
        assume(False)
    assert g >= h - 1e-9


@given(pl_functions(), thetas)
def test_r_and_a_are_integral_summaries(Z, th):
    try:
        h = h_measure(Z, th)
    except Undefined:
        assume(False)
    assert r_index(Z, th) == pytest.approx(math.sqrt(oracles.integral_at(Z, h)), rel=1e-12, abs=1e-12)
    if th == 1.0 and h > 0:
        assert a_index(Z) == pytest.approx(oracles.integral_at(Z, h) / h, rel=1e-12)


def test_zero_function_and_a_undefined():
    Z = zero(3)
    assert h_measure(Z) == 0 and g_measure(Z) == 0
    with pytest.raises(Undefined):
        a_index(Z)


def test_truncated_and_percentile():
    Z = pl_from_points([(0, 8), (2, 4), (4, 4), (8, 0)])
    assert truncated("total", Z, 2) == 12
    assert truncated("average", Z, 4) == 5
    assert percentile(Z, 0.75) == 2
    with pytest.raises(OutOfDomain):
        truncated("total", Z, 9)
    with pytest.raises(OutOfDomain):
        percentile(Z, 1.0)


def test_avg_of_avgs_against_quadrature():
    Z = pl_from_points([(0, 9), (1, 3), (4, 1)])
    ref = oracles.simpson(lambda t: oracles.integral_grid(Z, t) / t, 1e-12, 4.0, 200_000) / 4
    assert avg_of_avgs(Z) == pytest.approx(ref, rel=1e-7)
    assert avg_of_avgs(constant(2, 5)) == pytest.approx(2)


def test_localization_strict_and_plateau():
    loc = localization(MeasureKind.h(), linear(10, 10))
    assert loc.c == loc.d == 5
    plateau = pl_from_points([(0, 8), (2, 4), (4, 4), (8, 0)])
    loc = localization(MeasureKind.mu(4), plateau)
    assert (loc.c, loc.d) == (4, 2) and loc.C_interval == (4, 8)
    assert localization(MeasureKind("MaxValue"), plateau).c == 0


def test_discrete_measures_on_counts():
    p = from_counts([10, 8, 5, 4, 3, 0])
    dm = discrete_measures(p)
    assert dm.h == 4
    assert evaluate_discrete(MeasureKind.g(), p) == 5  # 30 ≥ 25, 30 < 36
    assert evaluate_discrete(MeasureKind.total(3), p) == 23
    assert evaluate_discrete(MeasureKind.pct(0.5), p) == 5
    assert evaluate_discrete(MeasureKind("Mean"), p) == 5
    # the embedding puts z_k at x = k − 1, so Z(x) = x crosses between ranks 3 and 4
    assert h_measure(to_continuous(p)) == pytest.approx(oracles.h_oracle(to_continuous(p))) == 3.5


@pytest.mark.parametrize(
    ("token", "tag", "theta", "p"),
    [("h:2", "H", 2.0, None), ("kos:1:2", "Kosmulski", 1.0, 2.0), ("a", "A", None, None),
     ("mu:3", "TruncatedAverage", 3.0, None), ("sum", "Total", None, None)],
)
def test_parse_measure(token, tag, theta, p):
    m = parse_measure(token)
    assert m.tag == tag and m.theta == theta and m.p == p


@pytest.mark.parametrize("token", ["zz", "h", "a:1", "kos:1", "mu:x"])
def test_parse_measure_rejects(token):
    with pytest.raises(ValueError):
        parse_measure(token)


@pytest.mark.parametrize(
    "kind",
    [MeasureKind.h(), MeasureKind.g(), MeasureKind.r(), MeasureKind.mu(2), MeasureKind.pct(0.5),
     MeasureKind("Mean"), MeasureKind("Total")],
    ids=lambda k: k.label,
)
def test_measures_monotone_under_pointwise_increase(kind):
    Z = pl_from_points([(0, 6), (3, 2), (6, 1)])
    Y = pl_from_points([(0, 7), (3, 3), (6, 1.5)])
    assert evaluate_measure(kind, Y) >= evaluate_measure(kind, Z)
