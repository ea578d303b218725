"""Sturm chains and exact real-root counting.

Chain entries after the first are kept as primitive integer polynomials.
Scaling an entry by a positive constant leaves every sign, and so every
variation count, unchanged; it only keeps the coefficients from exploding.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegreeTooSmall, EndpointZero, NotSquarefree
from .poly import Poly, _horner_int, content_int, derivative


def _primitive(nums):
    """Divide out the positive content, preserving signs."""
    g = content_int(nums)
    if g > 1:
        return [v // g for v in nums]
    return list(nums)


def _strip(nums):
    while nums and nums[-1] == 0:
        nums.pop()
    return nums


def _neg_rem_positive_multiple(a, b):
    """A positive multiple of ``-rem(a, b)`` for integer coefficient lists.

    Runs pseudo-division, scaling the running remainder by ``lc(b)/g`` at each
    step; the accumulated sign of those factors is undone at the end.
    """
    r = list(a)
    db = len(b) - 1
    lcb = b[-1]
    neg = True
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        g = gcd(lcb, c)
        mb, mc = lcb // g, c // g
        if mb < 0:
            neg = not neg
        r = [mb * v for v in r]
        for j in range(db + 1):
            r[shift + j] -= mc * b[j]
        r.pop()
        _strip(r)
        if r:
            r = _primitive(r)
    if neg:
        r = [-v for v in r]
    return r


@dataclass(frozen=True)
class SturmChain:
    """Sturm chain of ``polys[0]``; later entries are primitive integer polys."""

    polys: tuple

    @property
    def int_polys(self):
        return tuple(p.int_form()[0] for p in self.polys)

    def __len__(self):
        return len(self.polys)


def _to_int_primitive(p):
    nums, _ = p.int_form()
    return _primitive(nums)


def sturm_chain(p):
    """Sturm chain s0 = p, s1 ~ p', s_{i+1} ~ -rem(s_{i-1}, s_i).

    Raises NotSquarefree if a zero remainder appears before a constant entry.
    """
    if p.degree < 1:
        raise DegreeTooSmall(f"Sturm chain needs degree >= 1, got {p.degree}")
    chain = [p, Poly(_to_int_primitive(derivative(p)))]
    prev = _to_int_primitive(p)
    cur = list(chain[1].int_form()[0])
    fuel = p.degree - 1
    while len(cur) > 1:
        if fuel == 0:
            raise AssertionError("Sturm chain fuel exhausted with a non-constant tail")
        fuel -= 1
        r = _neg_rem_positive_multiple(prev, cur)
        if not r:
            raise NotSquarefree(
                f"gcd(p, p') has degree {len(cur) - 1}; p has a repeated root"
            )
        chain.append(Poly(r))
        prev, cur = cur, r
    return SturmChain(tuple(chain))


def _signs_at(int_polys, a, b):
    """Signs of each integer polynomial at a/b (b > 0)."""
    out = []
    for nums in int_polys:
        v = _horner_int(nums, a, b) if nums else 0
        out.append((v > 0) - (v < 0))
    return out


def _count_changes(signs):
    changes = 0
    last = 0
    for s in signs:
        if s:
            if last and s != last:
                changes += 1
            last = s
    return changes


def variation(ss, x):
    """Number of strict sign changes of the chain at ``x`` (zeros dropped)."""
    x = Fraction(x)
    return _count_changes(_signs_at(ss.int_polys, x.numerator, x.denominator))


def sign_sequence(ss, x):
    x = Fraction(x)
    return _signs_at(ss.int_polys, x.numerator, x.denominator)


def count_zeros(p, a, b, chain=None):
    """Number of distinct real roots of the squarefree ``p`` in (a, b)."""
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError(f"count_zeros needs a < b, got [{a}, {b}]")
    if p(a) == 0 or p(b) == 0:
        raise EndpointZero(f"polynomial vanishes at an endpoint of [{a}, {b}]")
    ss = chain if chain is not None else sturm_chain(p)
    return variation(ss, a) - variation(ss, b)
