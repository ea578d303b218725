"""Phase one: replace elementary functions by Taylor polynomials.

``approx_as_poly`` walks an expression tree, substitutes a truncated series
for every function application and propagates the truncation errors, giving
a polynomial ``q`` and a bound ``delta`` with ``|f(x) - q(x)| <= delta`` on
the input interval.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import SinCosErrorTooLarge
from .numerics import Interval
from .poly import Poly, eval_poly, poly_compose
from .transc import (
    ElemFn,
    check_precond,
    fn_range_bound,
    lipschitz_bound,
    pi_lower_bound,
    taylor_poly,
    taylor_rem_bound,
)

DEFAULT_PI_TERMS = 4


class Expr:
    __slots__ = ()

    def __add__(self, other):
        return Add(self, _lift(other))

    def __radd__(self, other):
        return Add(_lift(other), self)

    def __sub__(self, other):
        return Sub(self, _lift(other))

    def __rsub__(self, other):
        return Sub(_lift(other), self)

    def __mul__(self, other):
        return Mul(self, _lift(other))

    def __rmul__(self, other):
        return Mul(_lift(other), self)

    def __neg__(self):
        return Neg(self)


def _lift(v):
    return v if isinstance(v, Expr) else Cst(Fraction(v))


@dataclass(frozen=True)
class Cst(Expr):
    value: Fraction


@dataclass(frozen=True)
class Var(Expr):
    name: str = "x"


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class App(Expr):
    fn: ElemFn
    arg: Expr


def app(fn, arg):
    return App(ElemFn(fn) if isinstance(fn, str) else fn, arg)


def variables(e):
    """Set of variable names occurring in ``e``."""
    if isinstance(e, Var):
        return {e.name}
    if isinstance(e, Cst):
        return set()
    if isinstance(e, (Neg, App)):
        return variables(e.arg)
    return variables(e.left) | variables(e.right)


def has_app(e):
    if isinstance(e, App):
        return True
    if isinstance(e, (Cst, Var)):
        return False
    if isinstance(e, Neg):
        return has_app(e.arg)
    return has_app(e.left) or has_app(e.right)


@dataclass(frozen=True)
class ApproxResult:
    q: Poly
    delta: Fraction


def eval_expr_interval(e, iv, n):
    """Interval enclosure of ``e`` over ``iv`` by structural interval analysis."""
    if isinstance(e, Cst):
        return Interval.point(e.value)
    if isinstance(e, Var):
        return iv
    if isinstance(e, Neg):
        return -eval_expr_interval(e.arg, iv, n)
    if isinstance(e, App):
        inner = eval_expr_interval(e.arg, iv, n)
        check_precond(e.fn, inner)
        return fn_range_bound(e.fn, inner, n)
    a = eval_expr_interval(e.left, iv, n)
    b = eval_expr_interval(e.right, iv, n)
    if isinstance(e, Add):
        return a + b
    if isinstance(e, Sub):
        return a - b
    if isinstance(e, Mul):
        return a * b
    raise TypeError(f"not an expression node: {e!r}")


def _sincos_guard(fn, delta, pi_terms):
    if fn in (ElemFn.SIN, ElemFn.COS):
        r = pi_lower_bound(pi_terms)
        if delta > r / 2:
            raise SinCosErrorTooLarge(
                f"error {delta} entering {fn} exceeds r/2 = {r / 2}"
            )


def approx_as_poly(e, iv, n, pi_terms=DEFAULT_PI_TERMS):
    """Polynomial approximation of ``e`` on ``iv`` with a sound error bound."""
    if n < 1:
        raise ValueError("approx_as_poly needs n >= 1")
    if isinstance(e, Cst):
        return ApproxResult(Poly.const(e.value), Fraction(0))
    if isinstance(e, Var):
        return ApproxResult(Poly.x(), Fraction(0))
    if isinstance(e, Neg):
        r = approx_as_poly(e.arg, iv, n, pi_terms)
        return ApproxResult(-r.q, r.delta)
    if isinstance(e, App):
        g = approx_as_poly(e.arg, iv, n, pi_terms)
        _sincos_guard(e.fn, g.delta, pi_terms)
        J = eval_expr_interval(e.arg, iv, n).widen(g.delta)
        t = taylor_poly(e.fn, n)
        dt = taylor_rem_bound(e.fn, n, J)
        lip = lipschitz_bound(e.fn, J, n)
        return ApproxResult(poly_compose(t, g.q), dt + lip * g.delta)
    u = approx_as_poly(e.left, iv, n, pi_terms)
    v = approx_as_poly(e.right, iv, n, pi_terms)
    if isinstance(e, Add):
        return ApproxResult(u.q + v.q, u.delta + v.delta)
    if isinstance(e, Sub):
        return ApproxResult(u.q - v.q, u.delta + v.delta)
    if isinstance(e, Mul):
        mu = eval_expr_interval(e.left, iv, n).mag
        mv = eval_expr_interval(e.right, iv, n).mag
        return ApproxResult(
            u.q * v.q, mu * v.delta + mv * u.delta + u.delta * v.delta
        )
    raise TypeError(f"not an expression node: {e!r}")


def _ref(e, x, depth, pi_terms):
    # approx_as_poly on [x, x], carrying q(x) instead of q
    if isinstance(e, Cst):
        return e.value, Fraction(0)
    if isinstance(e, Var):
        return x, Fraction(0)
    if isinstance(e, Neg):
        v, d = _ref(e.arg, x, depth, pi_terms)
        return -v, d
    point = Interval.point(x)
    if isinstance(e, App):
        v, d = _ref(e.arg, x, depth, pi_terms)
        _sincos_guard(e.fn, d, pi_terms)
        J = eval_expr_interval(e.arg, point, depth).widen(d)
        dt = taylor_rem_bound(e.fn, depth, J)
        lip = lipschitz_bound(e.fn, J, depth)
        return eval_poly(taylor_poly(e.fn, depth), v), dt + lip * d
    a, da = _ref(e.left, x, depth, pi_terms)
    b, db = _ref(e.right, x, depth, pi_terms)
    if isinstance(e, Add):
        return a + b, da + db
    if isinstance(e, Sub):
        return a - b, da + db
    if isinstance(e, Mul):
        mu = eval_expr_interval(e.left, point, depth).mag
        mv = eval_expr_interval(e.right, point, depth).mag
        return a * b, mu * db + mv * da + da * db
    raise TypeError(f"not an expression node: {e!r}")


def eval_expr_ref(e, x, depth, pi_terms=DEFAULT_PI_TERMS):
    """Rational enclosure of ``e(x)`` from depth-``depth`` Taylor series."""
    x = Fraction(x)
    v, d = _ref(e, x, depth, pi_terms)
    return Interval(v - d, v + d)


def eval_expr_exact(e, x):
    """Exact value of an expression without function applications."""
    if isinstance(e, Cst):
        return e.value
    if isinstance(e, Var):
        return Fraction(x)
    if isinstance(e, Neg):
        return -eval_expr_exact(e.arg, x)
    if isinstance(e, App):
        raise ValueError("expression contains a transcendental function")
    a = eval_expr_exact(e.left, x)
    b = eval_expr_exact(e.right, x)
    if isinstance(e, Add):
        return a + b
    if isinstance(e, Sub):
        return a - b
    return a * b
