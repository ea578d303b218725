"""Regenerate the certificate corpus under corpus/.

Each entry is a Chebyshev interpolant produced by ``polycert gen``; a few
hand-written certificates (the cosine example, an exp(x) - 1 case near zero
and an identity certificate) are added verbatim.

    python benchmarks/make_corpus.py [outdir]
"""

import sys
from fractions import Fraction
from pathlib import Path

from polycert.cert import Certificate, format_certificate, parse_expr
from polycert.chebyshev import cheby_approx, gen_certificate_parts
from polycert.numerics import Interval, parse_rational
from polycert.poly import Poly

GENERATED = [
    # name, expression, lo, hi, degree
    ("exp_intro", "exp(x)", "0", "0.5", 3),
    ("cos_xp1", "cos(x + 1)", "0", "2.14", 5),
    ("sin_xm2", "sin(x - 2)", "-1", "3", 5),
    ("ln_xp01", "ln(x + 1/10)", "1.001", "1.1", 3),
    ("exp_half_cos_half", "exp(x * 1/2) + cos(x * 1/2)", "0.1", "1", 5),
    ("atan_cos", "atan(x) - cos(3/4 * x)", "-0.5", "0.5", 5),
    ("cos_0_214", "cos(x)", "0", "2.14", 5),
    ("sin_xp2", "sin(x + 2)", "-1.5", "1.5", 5),
    ("sin3x_exp", "sin(3 * x) + exp(x * 1/2)", "0", "1", 3),
    ("sin_sym", "sin(x)", "-1", "1", 5),
    ("cos_sym", "cos(x)", "-1", "1", 4),
    ("exp_01", "exp(x)", "0", "1", 4),
    ("exp_02", "exp(x)", "0", "2", 5),
    ("atan_half", "atan(x)", "-0.5", "0.5", 5),
    ("atan_09", "atan(x)", "0", "0.9", 4),
    ("ln_wide", "ln(x)", "1.1", "1.9", 4),
    ("ln_narrow", "ln(x)", "1.01", "1.5", 3),
    ("sincos", "sin(x) * cos(x)", "0", "1", 5),
    ("exp_half_m1", "exp(x * 1/2) - 1", "1", "2", 3),
    ("sin_cos_shift", "sin(x - 1) + cos(x + 1)", "0", "1", 5),
    ("exp_sin", "exp(x) + sin(x - 1)", "0", "1", 4),
    ("cubic", "x * x * x - x", "-1", "2", 3),
    ("cos_half", "cos(x * 1/2)", "0", "3", 5),
    ("sin_halfperiod", "sin(x)", "0", "3.14", 5),
    ("exp_quarter", "exp(x * 1/4)", "0", "4", 3),
    ("atan_scaled", "atan(x * 1/2)", "-1", "1", 5),
    ("two_sin_minus_x", "2 * sin(x) - x", "0", "1", 4),
    ("cos_squared", "cos(x) * cos(x)", "0", "1", 4),
    ("ln_half", "ln(x * 1/2)", "2.4", "3.6", 3),
    ("x_exp", "exp(x) * x", "0", "1", 5),
    ("sin_period", "sin(x)", "0", "6.28", 7),
]

COS_PERIOD = Poly(
    [
        Fraction(5476237, 4194304),
        Fraction(-5340353, 4194304),
        Fraction(1699887, 8388608),
        Fraction(3740489, 1125899906842624),
    ]
)
COS_PERIOD_INTERVAL = Interval(0, Fraction(314159265359, 50000000000))

# 2^-33.2 <= EXPM1_EPS <= 2^-33
EXPM1_EPS = Fraction(871, 1000) / 2**33


def generated(name, expr, lo, hi, deg):
    e = parse_expr(expr)
    iv = Interval(parse_rational(lo), parse_rational(hi))
    p, eps, n = gen_certificate_parts(e, iv, deg)
    header = f"# {name}: degree-{deg} Chebyshev interpolant of {expr} on [{lo}, {hi}]\n"
    return header + format_certificate(Certificate(e, p, eps, iv, n))


def handwritten():
    out = {}
    # eps: twice the sampled sup error (about 0.306), rounded up
    out["cos_period"] = "# cosine example polynomial over roughly [0, 2 pi]\n" + format_certificate(
        Certificate(parse_expr("cos(radiant)"), COS_PERIOD, Fraction(62, 100), COS_PERIOD_INTERVAL, 32)
    )
    e = parse_expr("exp(x) - 1")
    iv = Interval(Fraction(3, 1000), Fraction(1, 100))
    p, _ = cheby_approx(e, iv, 3)
    out["expm1_small"] = "# exp(x) - 1 on [0.003, 0.01], eps between 2^-33.2 and 2^-33\n" + (
        format_certificate(Certificate(e, p, EXPM1_EPS, iv, 32))
    )
    out["identity"] = "f = x; p = [0, 1]; eps = 1/1000000; I = [0, 1]; n = 4;\n"
    return out


def main(outdir="corpus"):
    root = Path(outdir)
    root.mkdir(parents=True, exist_ok=True)
    for name, expr, lo, hi, deg in GENERATED:
        (root / f"{name}.cert").write_text(generated(name, expr, lo, hi, deg))
        print(name)
    for name, text in handwritten().items():
        (root / f"{name}.cert").write_text(text)
        print(name)


if __name__ == "__main__":
    main(*sys.argv[1:])
