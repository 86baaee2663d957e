from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given

from impactlab.errors import BadExponent, NotDominatedPair, ZeroMean
from impactlab.generators import random_dominated_pairs
from impactlab.global_measures import (GLOBAL_TAGS, GlobalMeasureKind, check_global_monotone, curve_length,
                                       cv_squared, evaluate_global, gini_area, mean, power_integral,
                                       theil_classical, theil_generalized, variance)
from impactlab.profile import constant, linear, pl_from_points, zero

from . import oracles
from .conftest import pl_functions


@given(pl_functions(max_value=20))
def test_functionals_against_quadrature(Z):
    gini_ref = oracles.simpson(lambda x: oracles.integral_grid(Z, x), 0, Z.T, 4000)
    # I_Z is piecewise quadratic; Simpson is exact per segment only when knots align, so compare loosely
    assert gini_area(Z) == pytest.approx(gini_ref, rel=1e-6, abs=1e-9)
    assert curve_length(Z) == pytest.approx(
        oracles.piecewise_simpson(Z, lambda z: np.sqrt(1 + z * z), 20_000) - Z.T, rel=1e-9, abs=1e-9)
    assert power_integral(Z, 3) == pytest.approx(oracles.piecewise_simpson(Z, lambda z: z ** 3, 20), rel=1e-9,
                                                 abs=1e-9)
    assert power_integral(Z, 2.5) == pytest.approx(oracles.piecewise_simpson(Z, lambda z: z ** 2.5, 400),
                                                   rel=1e-7, abs=1e-9)


def test_closed_forms_on_lines():
    Z = linear(3, 6)
    assert gini_area(Z) == pytest.approx(6 * 27 / 2 / 3 - 6 * 27 / 6 / 3)  # ∫ (6x − x²) dx over [0, 3]
    assert mean(Z) == 3 and variance(Z) == pytest.approx(3)
    assert cv_squared(Z) == pytest.approx(1 / 3)
    assert curve_length(constant(0, 2)) == 0
    c = constant(2, 5)
    assert theil_classical(c) == pytest.approx(0, abs=1e-15)
    assert theil_generalized(c) == pytest.approx(5 * 2 * math.log(2))


def test_zero_mean_and_bad_exponent():
    with pytest.raises(ZeroMean):
        theil_classical(zero(2))
    with pytest.raises(ZeroMean):
        cv_squared(zero(2))
    with pytest.raises(BadExponent):
        power_integral(linear(1, 1), 1)
    with pytest.raises(BadExponent):
        GlobalMeasureKind("PowerIntegral", 0.5)
    with pytest.raises(ValueError):
        GlobalMeasureKind("Nope")


def test_zero_segments_in_theil():
    Z = pl_from_points([(0, 4), (2, 0), (3, 0)])
    ref = oracles.piecewise_simpson(Z, lambda z: np.where(z > 0, z * np.log(np.maximum(z, 1e-300)), 0.0), 4000)
    assert theil_generalized(Z) == pytest.approx(ref, rel=1e-6)


@pytest.mark.parametrize("tag", ["GiniArea", "CurveLength", "TheilGeneralized"])
def test_monotone_along_dominated_pairs(tag):
    pairs = random_dominated_pairs(3, 30, min_value=1.0)
    v = check_global_monotone(GlobalMeasureKind(tag), pairs)
    assert v.outcome.value == "holds_on_family" and v.details["checked"] == 30


def test_concentration_measures_are_not_globally_monotone():
    # raising the whole profile keeps the shape, so scale-free measures do not move
    pairs = [(linear(4, 4), linear(4, 8))]
    v = check_global_monotone(GlobalMeasureKind("CVSquared"), pairs)
    assert v.outcome.value == "violated"


def test_unordered_pair_rejected():
    with pytest.raises(NotDominatedPair):
        check_global_monotone(GlobalMeasureKind("GiniArea"), [(linear(4, 8), linear(4, 4))])


def test_every_tag_evaluates():
    Z = pl_from_points([(0, 5), (1, 2), (3, 1)])
    for tag in GLOBAL_TAGS:
        kind = GlobalMeasureKind(tag, 2.0 if tag == "PowerIntegral" else None)
        assert math.isfinite(evaluate_global(kind, Z))
