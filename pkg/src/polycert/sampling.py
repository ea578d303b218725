"""Sampled error estimates for an expression against a polynomial.

``float_error_scan`` evaluates with the platform libm in double precision
and is independent of the Taylor machinery, which makes it a convenient
second opinion in tests.  ``exact_error_scan`` uses the rational reference
enclosures instead.
"""

from fractions import Fraction

import numpy as np

from . import _kernels
from .approx import Add, App, Cst, Mul, Neg, Sub, Var, eval_expr_ref
from .poly import eval_poly
from .transc import ElemFn

_NP_FUNCS = {
    ElemFn.EXP: np.exp,
    ElemFn.SIN: np.sin,
    ElemFn.COS: np.cos,
    ElemFn.LN: np.log,
    ElemFn.ATAN: np.arctan,
}


def eval_expr_float(e, xs):
    """Vectorized double-precision value of ``e`` at the points ``xs``."""
    if isinstance(e, Cst):
        return np.full_like(xs, float(e.value))
    if isinstance(e, Var):
        return xs
    if isinstance(e, Neg):
        return -eval_expr_float(e.arg, xs)
    if isinstance(e, App):
        return _NP_FUNCS[e.fn](eval_expr_float(e.arg, xs))
    a = eval_expr_float(e.left, xs)
    b = eval_expr_float(e.right, xs)
    if isinstance(e, Add):
        return a + b
    if isinstance(e, Sub):
        return a - b
    if isinstance(e, Mul):
        return a * b
    raise TypeError(f"not an expression node: {e!r}")


def float_error_curve(e, p, lo, hi, npts):
    xs = np.linspace(float(lo), float(hi), npts)
    coeffs = np.array([float(c) for c in p.coeffs] or [0.0])
    err = np.abs(eval_expr_float(e, xs) - _kernels.horner_grid(coeffs, xs))
    return xs, err


def float_error_scan(e, p, lo, hi, npts=10_000):
    """``(max |e(x) - p(x)|, argmax)`` over ``npts`` equally spaced doubles."""
    xs, err = float_error_curve(e, p, lo, hi, npts)
    i = int(np.argmax(err))
    return float(err[i]), float(xs[i])


def grid(lo, hi, npts):
    """``npts`` equally spaced rationals from lo to hi inclusive."""
    lo, hi = Fraction(lo), Fraction(hi)
    if npts == 1:
        return [lo]
    step = (hi - lo) / (npts - 1)
    return [lo + i * step for i in range(npts)]


def enclosure_distance(e, p, x, depth):
    """Largest ``|y - p(x)|`` over y in the reference enclosure of ``e(x)``."""
    enc = eval_expr_ref(e, x, depth)
    px = eval_poly(p, x)
    return max(abs(enc.hi - px), abs(px - enc.lo))


def exact_error_scan(e, p, points, depth):
    """Max enclosure distance over ``points``; returns ``(value, argmax)``."""
    best, arg = Fraction(-1), None
    for x in points:
        d = enclosure_distance(e, p, x, depth)
        if d > best:
            best, arg = d, x
    return best, arg


def candidate_points(e, p, lo, hi, npts, k=16):
    """Rational points near the ``k`` largest local maxima of the float error."""
    lo, hi = Fraction(lo), Fraction(hi)
    xs, err = float_error_curve(e, p, lo, hi, npts)
    out = []
    for i in _kernels.local_maxima(err, k):
        x = Fraction(float(xs[int(i)]))
        out.append(min(max(x, lo), hi))
    return out
