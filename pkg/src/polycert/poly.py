"""Dense univariate polynomials over the rationals.

``Poly(c0, c1, ...)`` stores ``c0 + c1*x + ...``; the zero polynomial has an
empty coefficient tuple and every other polynomial has a nonzero leading
coefficient.
"""

import re
from fractions import Fraction
from math import gcd, lcm

from .errors import DivisionByZeroPoly, MalformedNumber, ParseError
from .numerics import parse_rational


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    __slots__ = ("coeffs", "_int_form")

    def __init__(self, coeffs=()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])
        self._int_form = None

    @classmethod
    def _from_trimmed(cls, coeffs):
        p = cls.__new__(cls)
        p.coeffs = coeffs
        p._int_form = None
        return p

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_const(self):
        return len(self.coeffs) <= 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({format_poly(self)})"

    def __bool__(self):
        return bool(self.coeffs)

    def int_form(self):
        """Return ``(nums, den)`` with ``self == Poly(nums) / den``, den > 0."""
        if self._int_form is None:
            den = 1
            for c in self.coeffs:
                den = lcm(den, c.denominator)
            nums = tuple(c.numerator * (den // c.denominator) for c in self.coeffs)
            self._int_form = (nums, den)
        return self._int_form

    def __call__(self, x):
        return eval_poly(self, x)

    def __add__(self, other):
        return poly_ring("add", self, other)

    def __sub__(self, other):
        return poly_ring("sub", self, other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_ring("mul", self, other)
        return poly_ring("scale", self, c=other)

    __rmul__ = __mul__

    def __neg__(self):
        return poly_ring("neg", self)


def _horner_int(nums, a, b):
    """Numerator of ``sum nums[i] (a/b)^i`` over the denominator ``b^deg``."""
    d = len(nums) - 1
    acc = nums[d]
    bp = 1
    for i in range(d - 1, -1, -1):
        bp *= b
        acc = acc * a + nums[i] * bp
    return acc


def eval_poly(p, x):
    """Evaluate ``p`` at the rational ``x`` by integer Horner's scheme.

    The coefficients are put over a common denominator and ``x = a/b`` is
    homogenized, so every step is an integer multiply-add and only the final
    result is reduced.
    """
    if not p.coeffs:
        return Fraction(0)
    x = Fraction(x)
    nums, den = p.int_form()
    acc = _horner_int(nums, x.numerator, x.denominator)
    return Fraction(acc, den * x.denominator ** (len(nums) - 1))


def sign_at(p, x):
    """Sign of ``p(x)`` as -1, 0 or 1."""
    if not p.coeffs:
        return 0
    x = Fraction(x)
    nums, _ = p.int_form()
    acc = _horner_int(nums, x.numerator, x.denominator)
    return (acc > 0) - (acc < 0)


def poly_ring(op, p, q=None, c=None):
    """Ring operation ``op`` in {add, sub, mul, neg, scale}.

    ``neg`` ignores ``q``; ``scale`` multiplies ``p`` by the rational ``c``.
    """
    a = p.coeffs
    if op == "neg":
        return Poly._from_trimmed(tuple(-x for x in a))
    if op == "scale":
        c = Fraction(c)
        if c == 0:
            return Poly._from_trimmed(())
        return Poly._from_trimmed(tuple(c * x for x in a))
    b = q.coeffs
    if op in ("add", "sub"):
        n = max(len(a), len(b))
        za = a + (Fraction(0),) * (n - len(a))
        zb = b + (Fraction(0),) * (n - len(b))
        if op == "add":
            return Poly._from_trimmed(_trim([x + y for x, y in zip(za, zb)]))
        return Poly._from_trimmed(_trim([x - y for x, y in zip(za, zb)]))
    if op == "mul":
        if not a or not b:
            return Poly._from_trimmed(())
        return Poly._from_trimmed(_mul_coeffs(p, q))
    raise ValueError(f"unknown polynomial op {op!r}")


def _mul_coeffs(p, q):
    # multiply integer forms, then divide by the product of denominators once
    pa, da = p.int_form()
    qb, db = q.int_form()
    out = [0] * (len(pa) + len(qb) - 1)
    for i, x in enumerate(pa):
        if x:
            for j, y in enumerate(qb):
                out[i + j] += x * y
    den = da * db
    return tuple(Fraction(v, den) for v in out)


def derivative(p):
    return Poly._from_trimmed(_trim([i * c for i, c in enumerate(p.coeffs)][1:]))


def poly_div(p, q):
    """Long division: return ``(quot, rem)`` with ``p = q*quot + rem``."""
    if q.is_zero():
        raise DivisionByZeroPoly("polynomial division by the zero polynomial")
    rem = list(p.coeffs)
    dq = q.degree
    lc = q.lc
    qc = q.coeffs
    if len(rem) - 1 < dq:
        return Poly(), p
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq] / lc
        quot[k] = c
        if c:
            for j in range(dq + 1):
                rem[k + j] -= c * qc[j]
    return Poly(quot), Poly(rem[:dq])


def poly_compose(p, q):
    """Return ``p(q(x))`` by Horner accumulation over the coefficients of p."""
    acc = Poly()
    for c in reversed(p.coeffs):
        acc = acc * q + Poly.const(c)
    return acc


def abs_coeff_bound(p, m):
    """``sum |c_i| m^i``, an upper bound on ``|p(x)|`` for ``|x| <= m``."""
    m = Fraction(m)
    if m < 0:
        raise ValueError("abs_coeff_bound needs m >= 0")
    return eval_poly(Poly._from_trimmed(tuple(abs(c) for c in p.coeffs)), m)


def content_int(nums):
    g = 0
    for v in nums:
        g = gcd(g, v)
    return g


_SPLIT_RE = re.compile(r"[,;]")


def parse_poly(text):
    """Parse ``[c0, c1, ...]`` (comma- or semicolon-separated)."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(1, 1, "polynomial in square brackets")
    body = s[1:-1].strip()
    if not body:
        return Poly()
    try:
        return Poly(parse_rational(t) for t in _SPLIT_RE.split(body))
    except MalformedNumber as exc:
        raise ParseError(1, 1, f"rational coefficient ({exc})") from None


def format_poly(p):
    return "[" + ", ".join(str(c) for c in p.coeffs) + "]"
