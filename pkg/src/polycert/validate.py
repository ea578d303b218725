"""Phase two: bound the error polynomial and decide the certificate.

The sup of ``|h|`` on ``[a, b]`` is attained at an endpoint or at a root of
``h'``.  Roots of ``h'`` are counted with a Sturm chain, located by an
unverified bisection oracle (or supplied as hints), and then validated by
sign changes before they are used in the extremal bound.
"""

import enum
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .approx import DEFAULT_PI_TERMS, approx_as_poly
from .errors import (
    CertError,
    EndpointZero,
    OracleDepthExceeded,
    ZeroValidationFailed,
)
from .poly import abs_coeff_bound, derivative, eval_poly, sign_at
from .sturm import count_zeros, sturm_chain, variation

DEFAULT_MAX_DEPTH = 128


class Verdict(enum.Enum):
    CERTIFIED = "certified"
    NOT_CERTIFIED = "not_certified"
    ERROR = "error"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConfInterval:
    u: Fraction
    v: Fraction

    def __post_init__(self):
        u, v = Fraction(self.u), Fraction(self.v)
        if u > v:
            raise ValueError(f"inverted confidence interval [{u}, {v}]")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def width(self):
        return self.v - self.u

    def __contains__(self, x):
        return self.u <= x <= self.v


@dataclass(frozen=True)
class ExtremalBound:
    B: Fraction
    K: Fraction
    e: Fraction
    bound: Fraction


@dataclass(frozen=True)
class PhaseTwoResult:
    certified: bool
    extremal: ExtremalBound
    num_zeros: int
    zeros: tuple


@dataclass
class CheckReport:
    verdict: Verdict
    reason: str = None
    delta1: Fraction = None
    gamma: Fraction = None
    num_zeros: int = 0
    zeros: tuple = ()
    extremal: ExtremalBound = None
    timings: dict = field(default_factory=dict)
    detail: str = ""

    @property
    def certified(self):
        return self.verdict is Verdict.CERTIFIED


def isolate_roots(p, a, b, nz, width_goal, max_depth=DEFAULT_MAX_DEPTH, chain=None):
    """Disjoint intervals in [a, b], one around each of the ``nz`` roots of p.

    Windows holding several roots are split by Sturm counts; a window with a
    single root is then narrowed by plain sign bisection.  Intervals never
    share an endpoint with a neighbouring window.
    """
    a, b = Fraction(a), Fraction(b)
    width_goal = Fraction(width_goal)
    ss = chain if chain is not None else sturm_chain(p)
    va, vb = variation(ss, a), variation(ss, b)
    if va - vb != nz:
        raise ValueError(f"Sturm count {va - vb} on ({a}, {b}) does not match nz = {nz}")
    out = []

    def too_deep(depth):
        if depth > max_depth:
            raise OracleDepthExceeded(f"root isolation exceeded depth {max_depth}")

    def refine(lo, hi, depth):
        # exactly one simple root in (lo, hi), p(lo) and p(hi) nonzero
        x, y = lo, hi
        sx = sign_at(p, x)
        while y - x > width_goal or (x == lo and lo != a) or (y == hi and hi != b):
            too_deep(depth)
            m = (x + y) / 2
            sm = sign_at(p, m)
            if sm == 0:
                out.append(ConfInterval(m, m))
                return
            if sm == sx:
                x = m
            else:
                y = m
            depth += 1
        out.append(ConfInterval(x, y))

    def split_at_root(lo, hi, m, vlo, vm, vhi, depth):
        # m is a root; find nonzero neighbours that isolate it
        d = (m - lo) / 2
        dep = depth
        while True:
            too_deep(dep)
            left = m - d
            if sign_at(p, left) != 0:
                vl = variation(ss, left)
                if vl - vm == 1:
                    break
            d /= 2
            dep += 1
        d = (hi - m) / 2
        dep2 = depth
        while True:
            too_deep(dep2)
            right = m + d
            if sign_at(p, right) != 0:
                vr = variation(ss, right)
                if vm - vr == 0:
                    break
            d /= 2
            dep2 += 1
        window(lo, left, vlo, vl, dep + 1)
        out.append(ConfInterval(m, m))
        window(right, hi, vr, vhi, dep2 + 1)

    def window(lo, hi, vlo, vhi, depth):
        k = vlo - vhi
        if k == 0:
            return
        if k == 1:
            refine(lo, hi, depth)
            return
        too_deep(depth)
        m = (lo + hi) / 2
        vm = variation(ss, m)
        if sign_at(p, m) == 0:
            split_at_root(lo, hi, m, vlo, vm, vhi, depth + 1)
            return
        window(lo, m, vlo, vm, depth + 1)
        window(m, hi, vm, vhi, depth + 1)

    window(a, b, va, vb, 0)
    return out


def validate_zeros(dp, zeros, nz, a, b):
    """Check that ``zeros`` are nz disjoint sign-change intervals inside [a, b].

    Together with a Sturm count of nz this means every root of dp in (a, b)
    lies in exactly one interval.  Raises ZeroValidationFailed otherwise.
    """
    a, b = Fraction(a), Fraction(b)
    if len(zeros) != nz:
        raise ZeroValidationFailed(None, f"expected {nz} intervals, got {len(zeros)}")
    for i, z in enumerate(zeros):
        if not (a <= z.u <= z.v <= b):
            raise ZeroValidationFailed(i, f"[{z.u}, {z.v}] is not inside [{a}, {b}]")
        if sign_at(dp, z.u) * sign_at(dp, z.v) > 0:
            raise ZeroValidationFailed(i, f"no sign change of the derivative on [{z.u}, {z.v}]")
    order = sorted(range(len(zeros)), key=lambda i: zeros[i].u)
    for i, j in zip(order, order[1:]):
        if zeros[i].v >= zeros[j].u:
            raise ZeroValidationFailed(j, f"overlaps interval #{i}")


def extremal_bound(h, dh, zeros, a, b):
    """max(|h(a)|, |h(b)|, K + B*e) from validated root intervals of dh."""
    a, b = Fraction(a), Fraction(b)
    B = abs_coeff_bound(dh, max(abs(a), abs(b)))
    ends = max(abs(eval_poly(h, a)), abs(eval_poly(h, b)))
    if not zeros:
        return ExtremalBound(B, Fraction(0), Fraction(0), ends)
    K = max(abs(eval_poly(h, z.u)) for z in zeros)
    e = max(z.width for z in zeros)
    return ExtremalBound(B, K, e, max(ends, K + B * e))


def oracle_width(dh, a, b, gamma, nz):
    w = (b - a) / 2**20
    if gamma > 0:
        b0 = abs_coeff_bound(dh, max(abs(a), abs(b)))
        w = min(w, gamma / (4 * (b0 + 1) * max(nz, 1)))
    return w


def check_err_poly(h, a, b, gamma, hints=None, max_depth=DEFAULT_MAX_DEPTH):
    """Decide whether ``|h(x)| <= gamma`` on [a, b]."""
    a, b, gamma = Fraction(a), Fraction(b), Fraction(gamma)
    if not a < b:
        raise ValueError(f"check_err_poly needs a < b, got [{a}, {b}]")
    zero = Fraction(0)
    if h.is_zero():
        eb = ExtremalBound(zero, zero, zero, zero)
        return PhaseTwoResult(gamma >= 0, eb, 0, ())
    dh = derivative(h)
    if dh.is_zero():
        eb = ExtremalBound(zero, zero, zero, abs(eval_poly(h, a)))
        return PhaseTwoResult(eb.bound <= gamma, eb, 0, ())
    if sign_at(dh, a) == 0 or sign_at(dh, b) == 0:
        raise EndpointZero(
            f"h' vanishes at an endpoint of [{a}, {b}]",
            hint="shift the interval endpoint slightly (e.g. 0 -> 0.003) to rule out the zero",
        )
    if dh.degree == 0:
        nz, chain = 0, None
    else:
        chain = sturm_chain(dh)
        nz = count_zeros(dh, a, b, chain=chain)
    if hints is not None:
        zeros = tuple(hints)
    elif nz == 0:
        zeros = ()
    else:
        w = oracle_width(dh, a, b, gamma, nz)
        zeros = tuple(isolate_roots(dh, a, b, nz, w, max_depth=max_depth, chain=chain))
    validate_zeros(dh, zeros, nz, a, b)
    eb = extremal_bound(h, dh, zeros, a, b)
    return PhaseTwoResult(eb.bound <= gamma, eb, nz, zeros)


def check_certificate(cert, hints=None, max_depth=DEFAULT_MAX_DEPTH, pi_terms=DEFAULT_PI_TERMS):
    """Run both phases on ``cert`` and return a CheckReport.

    Any failure inside the pipeline becomes an ERROR verdict carrying the
    error's reason code; nothing but a completed bound check certifies.
    """
    report = CheckReport(Verdict.ERROR)
    t0 = time.perf_counter()
    try:
        res = approx_as_poly(cert.f, cert.I, cert.n, pi_terms=pi_terms)
    except CertError as exc:
        report.reason, report.detail = exc.code, _describe(exc)
        report.timings["phase1"] = _ms(t0)
        return report
    report.timings["phase1"] = _ms(t0)
    report.delta1 = res.delta
    report.gamma = cert.eps - res.delta
    if report.gamma < 0:
        report.verdict = Verdict.NOT_CERTIFIED
        report.reason = "residual_negative"
        report.detail = "phase-one error alone exceeds eps; increase n"
        return report
    h = res.q - cert.p
    t1 = time.perf_counter()
    try:
        two = check_err_poly(h, cert.I.lo, cert.I.hi, report.gamma, hints, max_depth)
    except CertError as exc:
        report.reason, report.detail = exc.code, _describe(exc)
        report.timings["phase2"] = _ms(t1)
        return report
    report.timings["phase2"] = _ms(t1)
    report.num_zeros = two.num_zeros
    report.zeros = two.zeros
    report.extremal = two.extremal
    if two.certified:
        report.verdict = Verdict.CERTIFIED
    else:
        report.verdict = Verdict.NOT_CERTIFIED
        report.reason = "bound_exceeds_gamma"
        report.detail = "extremal bound on the error polynomial exceeds eps - delta"
    return report


def _describe(exc):
    msg = str(exc)
    return f"{msg} ({exc.hint})" if exc.hint else msg


def _ms(t0):
    return round((time.perf_counter() - t0) * 1000.0, 3)
