"""Small numeric primitives: adaptive Simpson quadrature and bracketed bisection."""

from __future__ import annotations

from collections.abc import Callable


def adaptive_simpson(f: Callable[[float], float], a: float, b: float,
                     rel_tol: float = 1e-10, max_depth: int = 48) -> float:
    """Integrate ``f`` over ``[a, b]`` by recursive Simpson refinement."""
    if b == a:
        return 0.0
    fa, fm, fb = f(a), f((a + b) / 2), f(b)
    whole = (b - a) * (fa + 4 * fm + fb) / 6
    scale = max(abs(whole), 1e-300)
    return _simpson_step(f, a, b, fa, fm, fb, whole, rel_tol * scale, max_depth)


def _simpson_step(f, a, b, fa, fm, fb, whole, tol, depth):
    m = (a + b) / 2
    lm, rm = (a + m) / 2, (m + b) / 2
    flm, frm = f(lm), f(rm)
    left = (m - a) * (fa + 4 * flm + fm) / 6
    right = (b - m) * (fm + 4 * frm + fb) / 6
    delta = left + right - whole
    if depth <= 0 or abs(delta) <= 15 * tol:
        return left + right + delta / 15
    return (_simpson_step(f, a, m, fa, flm, fm, left, tol / 2, depth - 1)
            + _simpson_step(f, m, b, fm, frm, fb, right, tol / 2, depth - 1))


def bisect_root(g: Callable[[float], float], lo: float, hi: float, iterations: int = 80) -> float:
    """Root of ``g`` on ``[lo, hi]`` assuming ``g(lo) >= 0 >= g(hi)``."""
    glo = g(lo)
    if glo == 0:
        return lo
    if g(hi) == 0:
        return hi
    positive_at_lo = glo > 0
    for _ in range(iterations):
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        gm = g(mid)
        if gm == 0:
            return mid
        if (gm > 0) == positive_at_lo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2
