from __future__ import annotations

import math
from fractions import Fraction

import pytest

from impactlab.bundles import (Interval, average_bundle, bundle_eval, bundle_less_a, bundle_less_ab,
                               check_bundle_axioms, custom_bundle, g_bundle, h_bundle, percentile_bundle,
                               radix_measure, radix_value_exact, theta_set, total_bundle)
from impactlab.errors import BadIndex, BadInterval, DigitOutOfRange, InadmissibleParameter, MixedPsiDirections
from impactlab.profile import linear, pl_from_points
from impactlab.verdicts import AxiomId, Outcome


def test_interval_operations():
    a, b = Interval(0, 2), Interval(1, 3, False, True)
    i = a.intersect(b)
    assert (i.lo, i.hi, i.lo_closed, i.hi_closed) == (1, 2, False, True)
    assert a.hull(b) == Interval(0, 3)
    assert Interval(1, 1, False, True).empty and not Interval(1, 1).empty
    assert not Interval(0, 1, True, False).contains(1)
    g = Interval(0, 1, False, False).grid(5)
    assert g == [0.25, 0.5, 0.75]
    ray = Interval(1, math.inf, True, False).grid(8)
    assert ray[0] == 1 and all(math.isfinite(t) for t in ray) and ray == sorted(ray)


def test_bundle_eval_respects_admissible_set():
    Z = linear(4, 8)
    assert bundle_eval(h_bundle(), Z, 1.0) == pytest.approx(8 / 3)
    with pytest.raises(InadmissibleParameter):
        bundle_eval(percentile_bundle(), Z, 4.0)
    with pytest.raises(InadmissibleParameter):
        bundle_eval(total_bundle(), Z, 0.0)


def test_theta_set_images():
    Z, Y = linear(4, 4), linear(4, 8)
    thetas, desc = theta_set(average_bundle(), Z, Y, 0, 2, grid=5)
    assert thetas == [0, 0.5, 1, 1.5, 2] and desc == "[0, 2]"
    # ψ_Z(x) = Z(x)/x is decreasing; the image of [0, 2] is [1, ∞) ∪ [3, ∞)
    thetas, desc = theta_set(h_bundle(), Z, Y, 0, 2, grid=9)
    assert thetas[0] == 1 and desc.startswith("[1,")


def test_mixed_directions_rejected():
    odd = custom_bundle("odd", lambda Z, t: Z(t), direction=lambda Z: "decreasing" if Z.ys[0] > 5 else "increasing")
    with pytest.raises(MixedPsiDirections):
        theta_set(odd, linear(4, 4), linear(4, 8), 0, 1)


def test_strict_comparisons_on_windows():
    Z, Y = linear(4, 4), linear(4, 8)
    assert bundle_less_a(average_bundle(), Z, Y, 2).relation == "less_a"
    assert bundle_less_a(average_bundle(), Y, Z, 2).relation == "not_less"
    Z2 = pl_from_points([(0, 6), (2, 4), (4, 2), (6, 0)])
    Y2 = pl_from_points([(0, 6), (2, 4), (4, 3), (6, 0)])
    assert bundle_less_ab(percentile_bundle(), Z2, Y2, 2, 4).relation == "less_ab"
    # the tie at x = 6 is outside the percentile parameter set, so ]2, 6] is still strict
    assert bundle_less_ab(average_bundle(), Z2, Y2, 2, 6).relation == "less_ab"
    with pytest.raises(BadInterval):
        bundle_less_ab(average_bundle(), Z2, Y2, 3, 2)


@pytest.mark.parametrize("make", [average_bundle, total_bundle, percentile_bundle, h_bundle, g_bundle])
def test_sheaf_axioms_hold_for_standard_bundles(make):
    family = [linear(4, s) for s in (2, 4, 6)] + [pl_from_points([(0, 6), (2, 4), (4, 0)]),
                                                  pl_from_points([(0, 6), (2, 4), (4, 1)])]
    verdicts = check_bundle_axioms(make(), family, grid=17)
    assert [v.axiom for v in verdicts] == [AxiomId.AX1, AxiomId.AX2, AxiomId.AX3, AxiomId.AX4]
    for v in verdicts:
        assert v.outcome in (Outcome.HOLDS, Outcome.VACUOUS), (v.axiom, v.witnesses)


def test_radix_measure_exact():
    assert radix_value_exact([1, 2, 0, 1], 2, 4) == 1 + Fraction(2, 3) + Fraction(1, 27)
    assert radix_measure([2, 2], 2, 1) == 2
    with pytest.raises(DigitOutOfRange):
        radix_value_exact([3], 2, 1)
    with pytest.raises(BadIndex):
        radix_value_exact([1, 1], 2, 3)
