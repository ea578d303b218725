"""Truncated Taylor series and sound bounds for the supported functions.

Every bound here is a pure rational computation: Lagrange remainders for
sin/cos/exp (with e < 3) and alternating-series tails for atan and ln.
"""

import enum
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import PrecondViolation
from .numerics import Interval, ceil_rat
from .poly import Poly, eval_poly, poly_compose


class ElemFn(enum.Enum):
    EXP = "exp"
    SIN = "sin"
    COS = "cos"
    LN = "ln"
    ATAN = "atan"

    def __str__(self):
        return self.value


def check_precond(fn, iv):
    """Raise PrecondViolation unless the series for ``fn`` is valid on ``iv``."""
    if fn is ElemFn.EXP:
        if iv.lo < 0:
            raise PrecondViolation(fn, iv, "exp series needs a non-negative argument (lo >= 0)")
    elif fn is ElemFn.LN:
        if not (1 < iv.lo and iv.hi < 2):
            raise PrecondViolation(fn, iv, "ln series needs the argument inside (1, 2)")
    elif fn is ElemFn.ATAN:
        if not (-1 < iv.lo and iv.hi < 1):
            raise PrecondViolation(fn, iv, "atan series needs the argument inside (-1, 1)")


@lru_cache(maxsize=None)
def _series_coeffs(fn, n):
    if fn is ElemFn.EXP:
        return tuple(Fraction(1, factorial(i)) for i in range(n + 1))
    if fn is ElemFn.SIN:
        return tuple(
            Fraction((-1) ** (i // 2), factorial(i)) if i % 2 else Fraction(0)
            for i in range(n + 1)
        )
    if fn is ElemFn.COS:
        return tuple(
            Fraction(0) if i % 2 else Fraction((-1) ** (i // 2), factorial(i))
            for i in range(n + 1)
        )
    if fn is ElemFn.ATAN:
        return tuple(
            Fraction((-1) ** (i // 2), i) if i % 2 else Fraction(0) for i in range(n + 1)
        )
    if fn is ElemFn.LN:
        # ln(1 + y) in powers of y
        return (Fraction(0),) + tuple(Fraction((-1) ** (i + 1), i) for i in range(1, n + 1))
    raise ValueError(fn)


@lru_cache(maxsize=None)
def taylor_poly(fn, n):
    """Degree-``n`` Taylor polynomial of ``fn`` (around 1 for ln, else 0).

    The ln series is returned already shifted, i.e. as a polynomial in x
    rather than in y = x - 1.
    """
    if n < 1:
        raise ValueError("taylor_poly needs n >= 1")
    t = Poly(_series_coeffs(fn, n))
    if fn is ElemFn.LN:
        t = poly_compose(t, Poly((-1, 1)))
    return t


def taylor_rem_bound(fn, n, iv):
    """Bound on ``|fn(x) - taylor_poly(fn, n)(x)|`` over ``iv``."""
    check_precond(fn, iv)
    if fn in (ElemFn.SIN, ElemFn.COS):
        return iv.mag ** (n + 1) / factorial(n + 1)
    if fn is ElemFn.EXP:
        return 3 ** ceil_rat(iv.hi) * iv.hi ** (n + 1) / factorial(n + 1)
    if fn is ElemFn.ATAN:
        return iv.mag ** (n + 1) / (n + 1)
    if fn is ElemFn.LN:
        return (iv.hi - 1) ** (n + 1) / (n + 1)
    raise ValueError(fn)


def pi_lower_bound(terms=4):
    """Partial Leibniz sum for pi stopped after an even number of terms."""
    if terms < 1:
        raise ValueError("pi_lower_bound needs terms >= 1")
    k2 = terms + (terms % 2)
    return 4 * sum(Fraction((-1) ** i, 2 * i + 1) for i in range(k2))


def fn_range_bound(fn, iv, n):
    """Interval containing ``fn(iv)``."""
    check_precond(fn, iv)
    if fn in (ElemFn.SIN, ElemFn.COS):
        return Interval(-1, 1)
    t = taylor_poly(fn, n)
    d = taylor_rem_bound(fn, n, iv)
    return Interval(eval_poly(t, iv.lo) - d, eval_poly(t, iv.hi) + d)


def lipschitz_bound(fn, iv, n):
    """Upper bound on ``|fn'|`` over ``iv``."""
    check_precond(fn, iv)
    if fn in (ElemFn.SIN, ElemFn.COS, ElemFn.ATAN):
        return Fraction(1)
    if fn is ElemFn.EXP:
        return fn_range_bound(fn, iv, n).hi
    if fn is ElemFn.LN:
        return 1 / iv.lo
    raise ValueError(fn)
