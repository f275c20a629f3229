"""Exact rho-refinements of the unit interval.

Rules, points and lengths are ``fractions.Fraction`` values. Strings such as
``"1/3"`` or ``"0.25"`` are accepted wherever a rational is expected.
"""

from fractions import Fraction

from . import _kakutani
from ._kakutani import KakutaniError, suite_names

__all__ = [
    "KakutaniError",
    "refine",
    "stats",
    "interval_address",
    "discrepancy",
    "convergence",
    "random_reordering",
    "lexicographic_reordering",
    "van_der_corput",
    "remark22",
    "verify",
    "suite_names",
]


def _s(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or a decimal string")
    return str(x)


def _ss(xs):
    return [_s(x) for x in xs]


def _fs(xs):
    return [Fraction(x) for x in xs]


def refine(rule, steps, start=None, full=False, max_intervals=10_000_000):
    """Breakpoints of rho^n applied to `start` (default {0,1}), or of the full subdivision."""
    pts = _kakutani.refine(_ss(rule), steps, None if start is None else _ss(start), full, max_intervals)
    return _fs(pts)


def stats(rule, steps):
    """Rows (n, k_n, a_n, A_n) for n = 1..steps; counts only, so huge n is fine."""
    return [(n, int(k), Fraction(a), Fraction(b)) for n, k, a, b in _kakutani.stats(_ss(rule), steps)]


def interval_address(rule, word):
    lo, hi = _kakutani.interval_address(_ss(rule), list(word))
    return Fraction(lo), Fraction(hi)


def discrepancy(points):
    """(extreme, star) discrepancy of a finite multiset in [0,1]."""
    extreme, star = _kakutani.discrepancy(_ss(points))
    return Fraction(extreme), Fraction(star)


def convergence(rule, checkpoints, convention="right", max_intervals=10_000_000):
    rows = _kakutani.convergence(_ss(rule), list(checkpoints), convention, max_intervals)
    return [(n, k, Fraction(e), Fraction(s)) for n, k, e, s in rows]


def random_reordering(rule, blocks, seed, convention="right", max_intervals=10_000_000):
    """(points, block_offsets) of the sequential random reordering."""
    pts, offsets = _kakutani.random_reordering(_ss(rule), blocks, seed, convention, max_intervals)
    return _fs(pts), offsets


def lexicographic_reordering(rule, blocks, convention="left", max_intervals=10_000_000):
    pts, offsets = _kakutani.lexicographic_reordering(_ss(rule), blocks, convention, max_intervals)
    return _fs(pts), offsets


def van_der_corput(count):
    return _fs(_kakutani.van_der_corput(count))


def remark22(n_max=400):
    """Rows (n, nu_n([0, 2/5))) for the start {0, 2/5, 1} under halving."""
    return [(n, Fraction(v)) for n, v in _kakutani.remark22(n_max)]


def verify(name):
    return _kakutani.verify(name)
