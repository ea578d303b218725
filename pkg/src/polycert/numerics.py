"""Exact rational scalars and closed-interval arithmetic.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.
"""

import re
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import MalformedNumber

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

# Exponents beyond this would allocate absurd integers on hostile input.
MAX_EXPONENT = 10_000

_DECIMAL_RE = re.compile(r"([+-]?)(\d+)(?:\.(\d*))?(?:[eE]([+-]?\d+))?")
_FRACTION_RE = re.compile(r"([+-]?)(\d+)/(\d+)")


def _normalize_sign(text):
    return text.strip().replace("−", "-")


def rat_from_decimal(text):
    """Exact value of a decimal literal such as ``"-3.77e-3"``."""
    m = _DECIMAL_RE.fullmatch(_normalize_sign(text))
    if m is None:
        raise MalformedNumber(f"not a decimal literal: {text!r}")
    sign, whole, frac, exp = m.groups()
    frac = frac or ""
    e = int(exp) if exp else 0
    if abs(e) > MAX_EXPONENT:
        raise MalformedNumber(f"exponent out of range: {text!r}")
    value = Fraction(int(whole + frac)) / 10 ** len(frac)
    value = value * 10**e if e >= 0 else value / 10**-e
    return -value if sign == "-" else value


def parse_rational(text):
    """Parse ``num/den``, a plain integer, or a decimal literal."""
    s = _normalize_sign(text)
    m = _FRACTION_RE.fullmatch(s)
    if m is not None:
        sign, num, den = m.groups()
        if int(den) == 0:
            raise MalformedNumber(f"zero denominator: {text!r}")
        value = Fraction(int(num), int(den))
        return -value if sign == "-" else value
    return rat_from_decimal(s)


def format_rational(x):
    return str(Fraction(x))


def rat_to_decimal(x):
    """Exact decimal text for a rational whose denominator is 2^a 5^b.

    Raises ValueError for other denominators, which have no finite expansion.
    """
    x = Fraction(x)
    den = x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise ValueError(f"{x} has no terminating decimal expansion")
    digits = max(twos, fives)
    scaled = x * 10**digits
    assert scaled.denominator == 1
    n = abs(scaled.numerator)
    sign = "-" if x < 0 else ""
    if digits == 0:
        return f"{sign}{n}"
    s = str(n).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def decimal_approx(x, digits=12):
    """Decimal approximation to ``digits`` significant digits, without floats."""
    x = Fraction(x)
    if x == 0:
        return f"{0:.{digits - 1}e}"
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return f"{d:.{digits - 1}e}"


def ceil_rat(x):
    return -((-x.numerator) // x.denominator)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo > hi:
            raise ValueError(f"inverted interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x):
        return cls(x, x)

    @property
    def mag(self):
        """max(|lo|, |hi|)"""
        return max(abs(self.lo), abs(self.hi))

    @property
    def width(self):
        return self.hi - self.lo

    def __contains__(self, x):
        return self.lo <= x <= self.hi

    def contains_interval(self, other):
        return self.lo <= other.lo and other.hi <= self.hi

    def widen(self, r):
        return Interval(self.lo - r, self.hi + r)

    def __add__(self, other):
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other):
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other):
        ps = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(ps), max(ps))

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def iv_arith(op, a, b=None):
    """Apply ``op`` in {"add", "sub", "mul", "neg"}; ``b`` is ignored for neg."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown interval op {op!r}")
