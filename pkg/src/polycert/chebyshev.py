"""Chebyshev interpolation for generating test certificates.

Stands in for an external minimax tool: it interpolates at (rationalized)
Chebyshev nodes, rounds the coefficients to binary64 the way a libm
generator would emit them, and estimates the sup error by sampling.  The
estimate is not a bound; the checker supplies the bound.
"""

import math
from fractions import Fraction

from .approx import eval_expr_interval, eval_expr_ref
from .poly import Poly
from .sampling import candidate_points, exact_error_scan, grid

DEFAULT_REF_DEPTH = 80
EPS_FLOOR = Fraction(1, 10**15)


def chebyshev_nodes(iv, count):
    """``count`` Chebyshev points of the first kind mapped into ``iv``.

    The cosines are taken in double precision and then used exactly, so the
    nodes are rationals close to (not equal to) the textbook nodes.
    """
    mid = (iv.lo + iv.hi) / 2
    half = (iv.hi - iv.lo) / 2
    return [
        mid + half * Fraction(math.cos((2 * k + 1) * math.pi / (2 * count)))
        for k in range(count)
    ]


def interpolate(xs, ys):
    """Exact monomial coefficients of the interpolant through (xs, ys)."""
    n = len(xs)
    dd = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    # Newton form to monomial form, innermost first
    coeffs = [dd[n - 1]]
    for k in range(n - 2, -1, -1):
        shifted = [Fraction(0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= xs[k] * c
        shifted[0] += dd[k]
        coeffs = shifted
    return coeffs


def round_binary64(c):
    return Fraction(float(c))


def cheby_approx(e, iv, deg, samples=1000, depth=DEFAULT_REF_DEPTH):
    """Degree-``deg`` Chebyshev interpolant of ``e`` on ``iv`` and an error estimate.

    Node values are midpoints of reference enclosures.  The estimate is the
    largest distance from p(x) to the enclosure of e(x) over ``samples``
    equally spaced points plus the peaks of a denser float scan.
    """
    if deg < 1:
        raise ValueError("cheby_approx needs deg >= 1")
    # raises PrecondViolation if some function argument leaves its domain
    eval_expr_interval(e, iv, depth)
    xs = chebyshev_nodes(iv, deg + 1)
    ys = []
    for x in xs:
        enc = eval_expr_ref(e, x, depth)
        ys.append((enc.lo + enc.hi) / 2)
    p = Poly(round_binary64(c) for c in interpolate(xs, ys))
    points = grid(iv.lo, iv.hi, samples)
    points += candidate_points(e, p, iv.lo, iv.hi, max(16 * samples, 1000))
    est, _ = exact_error_scan(e, p, points, depth)
    return p, est


def round_up_sig(x, digits=4):
    """Smallest decimal with ``digits`` significant digits that is >= x > 0."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("round_up_sig needs x > 0")
    exp = math.floor(math.log10(x.numerator) - math.log10(x.denominator)) - digits + 1
    scale = Fraction(10) ** exp
    q = x / scale
    n = -((-q.numerator) // q.denominator)
    return n * scale


def gen_certificate_parts(e, iv, deg, samples=1000):
    """``(p, eps, n)`` for a generated certificate.

    eps is twice the estimated error, rounded up to four significant
    digits; n is six times the degree with a floor of 32.
    """
    p, est = cheby_approx(e, iv, deg, samples)
    eps = round_up_sig(2 * est) if est > 0 else EPS_FLOOR
    n = max(32, 6 * deg)
    return p, eps, n
