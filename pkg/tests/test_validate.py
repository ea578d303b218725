from fractions import Fraction

import pytest

from polycert.cert import Certificate, parse_expr
from polycert.chebyshev import cheby_approx
from polycert.errors import EndpointZero, OracleDepthExceeded, ZeroValidationFailed
from polycert.numerics import Interval
from polycert.poly import Poly, derivative, eval_poly
from polycert.sampling import float_error_scan
from polycert.sturm import count_zeros
from polycert.validate import (
    ConfInterval,
    Verdict,
    check_certificate,
    check_err_poly,
    extremal_bound,
    isolate_roots,
    validate_zeros,
)

from conftest import rand_rat
from test_sturm import random_case, random_window

XX1 = Poly([-1, 0, 1])
CUBIC = Poly([0, -1, 0, 1])


def test_isolate_examples():
    z = isolate_roots(Poly([0, 2]), -1, 1, 1, Fraction(1, 2))
    assert len(z) == 1 and 0 in z[0] and z[0].width <= Fraction(1, 2)
    z = isolate_roots(XX1, -2, 2, 2, Fraction(1, 4))
    assert len(z) == 2
    assert sorted(r for r in (-1, 1) for iv in z if r in iv) == [-1, 1]
    assert all(iv.width <= Fraction(1, 4) for iv in z)
    z = isolate_roots(CUBIC, -2, 2, 3, Fraction(1, 8))
    assert [sum(1 for iv in z if r in iv) for r in (-1, 0, 1)] == [1, 1, 1]


def test_validate_examples():
    validate_zeros(Poly([0, 2]), [ConfInterval(Fraction(-1, 4), Fraction(1, 4))], 1, -1, 1)
    with pytest.raises(ZeroValidationFailed):
        validate_zeros(Poly([0, 2]), [ConfInterval(Fraction(1, 4), Fraction(1, 2))], 1, -1, 1)
    ok = [ConfInterval(Fraction(-3, 2), Fraction(-1, 2)), ConfInterval(Fraction(1, 2), Fraction(3, 2))]
    validate_zeros(XX1, ok, 2, -2, 2)


def test_validate_rejections():
    one = [ConfInterval(Fraction(-1, 4), Fraction(1, 4))]
    with pytest.raises(ZeroValidationFailed):
        validate_zeros(Poly([0, 2]), one, 2, -1, 1)  # wrong count
    with pytest.raises(ZeroValidationFailed):
        validate_zeros(Poly([0, 2]), one, 1, Fraction(-1, 8), 1)  # outside [a, b]
    same = [ConfInterval(Fraction(-1, 2), Fraction(1, 2))] * 2
    with pytest.raises(ZeroValidationFailed):
        validate_zeros(CUBIC, same, 2, -2, 2)  # overlapping
    touching = [ConfInterval(Fraction(-3, 2), 0), ConfInterval(0, Fraction(3, 2))]
    with pytest.raises(ZeroValidationFailed):
        validate_zeros(CUBIC, touching, 2, -2, 2)
    with pytest.raises(ValueError):
        ConfInterval(1, 0)


def test_extremal_examples():
    z = [ConfInterval(Fraction(-1, 8), Fraction(1, 8))]
    eb = extremal_bound(XX1, Poly([0, 2]), z, -2, 2)
    assert (eb.B, eb.K, eb.e, eb.bound) == (4, Fraction(63, 64), Fraction(1, 4), 3)
    assert extremal_bound(Poly([5]), Poly([]), [], 0, 1).bound == 5
    assert extremal_bound(Poly([0, 1]), Poly([1]), [], 0, 1).bound == 1


def test_check_err_poly_examples():
    r = check_err_poly(XX1, -2, 2, 3)
    assert r.certified and r.extremal.bound == 3
    r = check_err_poly(XX1, -2, 2, 2)
    assert not r.certified and r.extremal.bound == 3
    assert check_err_poly(Poly([]), 0, 1, 0).certified
    with pytest.raises(EndpointZero) as exc:
        check_err_poly(XX1, 0, 1, 1)
    assert exc.value.hint


def test_check_err_poly_with_hints():
    h = Poly([Fraction(1, 10), -1, 0, 1])
    # h' = 3x^2 - 1 vanishes at +-0.57735; true max |h| is about 0.4849
    wide = [ConfInterval(Fraction(-3, 5), Fraction(-1, 2)), ConfInterval(Fraction(1, 2), Fraction(3, 5))]
    r = check_err_poly(h, -1, 1, Fraction(1, 2), wide)
    assert not r.certified and r.extremal.bound == Fraction(121, 250) + Fraction(4, 10)
    hints = [ConfInterval(Fraction(-578, 1000), Fraction(-577, 1000)),
             ConfInterval(Fraction(577, 1000), Fraction(578, 1000))]
    assert check_err_poly(h, -1, 1, Fraction(1, 2), hints).certified
    with pytest.raises(ZeroValidationFailed):
        check_err_poly(h, -1, 1, Fraction(1, 2), hints[:1])


def test_isolate_properties(rng):
    for _ in range(150):
        p, _roots = random_case(rng)
        a, b = random_window(rng, p)
        nz = count_zeros(p, a, b)
        w = Fraction(1, rng.choice([1, 8, 1000]))
        z = isolate_roots(p, a, b, nz, w)
        assert len(z) == nz
        for iv in z:
            assert a <= iv.u <= iv.v <= b
            assert iv.width <= w
            pu, pv = eval_poly(p, iv.u), eval_poly(p, iv.v)
            assert pu * pv < 0 or (iv.u == iv.v and pu == 0)
        validate_zeros(p, z, nz, a, b)


def test_isolate_exact_midpoint_root():
    # root 0 is the first bisection midpoint of [-1, 1]
    z = isolate_roots(CUBIC, -2, 2, 3, Fraction(1, 16))
    assert ConfInterval(0, 0) in z


def test_isolate_depth_limit():
    p = Poly([-1, 0, 3])
    with pytest.raises(OracleDepthExceeded):
        isolate_roots(p, -1, 1, 2, Fraction(1, 2**60), max_depth=10)


def test_determinism(rng):
    for _ in range(20):
        p, _ = random_case(rng)
        a, b = random_window(rng, p)
        h = p * Poly([0, 1])
        if eval_poly(derivative(h), a) == 0 or eval_poly(derivative(h), b) == 0:
            continue
        assert check_err_poly(h, a, b, 1) == check_err_poly(h, a, b, 1)


def test_extremal_dominance(rng):
    done = 0
    while done < 30:
        h = Poly([rand_rat(rng, -5, 5, 20) for _ in range(rng.randint(2, 9))])
        a, b = sorted([rand_rat(rng, -2, 2, 32), rand_rat(rng, -2, 2, 32)])
        dh = derivative(h)
        if a == b or eval_poly(dh, a) == 0 or eval_poly(dh, b) == 0:
            continue
        r = check_err_poly(h, a, b, 0)
        sampled = max(abs(eval_poly(h, a + (b - a) * Fraction(i, 999))) for i in range(1000))
        assert r.extremal.bound >= sampled
        done += 1


EXP_INTRO = parse_expr("exp(x)")
EXP_IV = Interval(0, Fraction(1, 2))


@pytest.fixture(scope="module")
def exp_poly():
    p, _ = cheby_approx(EXP_INTRO, EXP_IV, 3)
    return p


def test_certificate_generous_eps(exp_poly):
    r = check_certificate(Certificate(EXP_INTRO, exp_poly, Fraction(1, 10), EXP_IV, 32))
    assert r.verdict is Verdict.CERTIFIED
    assert r.gamma >= 0 and r.extremal.bound <= r.gamma


def test_certificate_tiny_eps(exp_poly):
    err, _ = float_error_scan(EXP_INTRO, exp_poly, 0, 0.5)
    assert err > 1e-9
    r = check_certificate(Certificate(EXP_INTRO, exp_poly, Fraction(1, 10**9), EXP_IV, 32))
    assert r.verdict is Verdict.NOT_CERTIFIED
    assert r.reason in ("residual_negative", "bound_exceeds_gamma")


def test_certificate_residual_negative(exp_poly):
    r = check_certificate(Certificate(EXP_INTRO, exp_poly, Fraction(1, 10**9), EXP_IV, 3))
    assert r.verdict is Verdict.NOT_CERTIFIED
    assert r.reason == "residual_negative" and r.gamma < 0


def test_certificate_error_paths():
    ln = Certificate(parse_expr("ln(x)"), Poly([0]), Fraction(1), Interval(Fraction(1, 2), 1), 8)
    r = check_certificate(ln)
    assert r.verdict is Verdict.ERROR and r.reason == "precond_violation"
    # h = x^2 - 1 has h'(0) = 0
    ez = Certificate(parse_expr("x * x"), Poly([1]), Fraction(10), Interval(0, 1), 4)
    r = check_certificate(ez)
    assert r.verdict is Verdict.ERROR and r.reason == "endpoint_zero"
    assert "shift" in r.detail
    hint = [ConfInterval(Fraction(1, 4), Fraction(1, 2))]
    ez2 = Certificate(parse_expr("x * x"), Poly([]), Fraction(10), Interval(-1, 1), 4)
    r = check_certificate(ez2, hints=hint)
    assert r.verdict is Verdict.ERROR and r.reason == "zero_validation_failed"
    sc = Certificate(parse_expr("sin(exp(x))"), Poly([]), Fraction(10), Interval(0, 3), 1)
    r = check_certificate(sc)
    assert r.verdict is Verdict.ERROR and r.reason == "sincos_error_too_large"
