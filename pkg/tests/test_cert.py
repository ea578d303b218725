import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polycert.approx import Add, App, Cst, Mul, Neg, Sub, Var, eval_expr_exact, has_app
from polycert.cert import (
    MAX_NESTING,
    Certificate,
    emit_report,
    format_certificate,
    format_expr,
    format_zero_hints,
    parse_certificate,
    parse_expr,
    parse_report,
    parse_zero_hints,
)
from polycert.errors import (
    CertError,
    InvertedInterval,
    MultipleVariables,
    ParseError,
    UnknownFunction,
)
from polycert.numerics import Interval
from polycert.poly import Poly
from polycert.transc import ElemFn
from polycert.validate import CheckReport, ConfInterval, ExtremalBound, Verdict

COS_TEXT = """\
# cosine example
f = cos(radiant);
p = [5476237/4194304, -5340353/4194304; 1699887/8388608, 3740489/1125899906842624];
eps = 1/4;
I = [0, 314159265359/50000000000];
n = 32;
"""
IDENTITY = "f = x; p = [0, 1]; eps = 1/1000000; I = [0, 1]; n = 4;"


def test_cosine_certificate():
    c = parse_certificate(COS_TEXT)
    assert c.p[0] == Fraction(5476237, 4194304)
    assert c.p.degree == 3
    assert c.f == App(ElemFn.COS, Var("radiant"))
    assert c.var == "radiant"
    assert c.I == Interval(0, Fraction(314159265359, 50000000000))
    assert (c.eps, c.n) == (Fraction(1, 4), 32)


def test_identity_certificate():
    c = parse_certificate(IDENTITY)
    assert c == Certificate(Var("x"), Poly([0, 1]), Fraction(1, 10**6), Interval(0, 1), 4)


def test_statement_order_free():
    parts = [s.strip() + ";" for s in IDENTITY.split(";") if s.strip()]
    assert parse_certificate(" ".join(reversed(parts))) == parse_certificate(IDENTITY)


@pytest.mark.parametrize(
    "text, exc",
    [
        ("f = sin(x) + cos(y); p = [1]; eps = 1; I = [0, 1]; n = 4;", MultipleVariables),
        ("f = tan(x); p = [1]; eps = 1; I = [0, 1]; n = 4;", UnknownFunction),
        ("f = div(x); p = [1]; eps = 1; I = [0, 1]; n = 4;", UnknownFunction),
        ("f = x / 2; p = [1]; eps = 1; I = [0, 1]; n = 4;", ParseError),
        ("f = x; p = [1]; eps = 0; I = [0, 1]; n = 4;", ParseError),
        ("f = x; p = [1]; eps = 1; I = [1, 1]; n = 4;", ParseError),
        ("f = x; p = [1]; eps = 1; I = [0, 1, 2]; n = 4;", ParseError),
        ("f = x; p = [1]; eps = 1; I = [0, 1]; n = 0;", ParseError),
        ("f = x; p = [1]; eps = 1; I = [0, 1]; n = 1.5;", ParseError),
        ("f = x; p = [1]; eps = 1; I = [0, 1];", ParseError),
        ("f = x; f = x; p = [1]; eps = 1; I = [0, 1]; n = 4;", ParseError),
        ("f = x; p = [1]; eps = 1; I = [0, 1]; n = 4", ParseError),
        ("f = sin x; p = [1]; eps = 1; I = [0, 1]; n = 4;", ParseError),
        ("f = x; p = [1/0]; eps = 1; I = [0, 1]; n = 4;", ParseError),
        ("f = x @ 2; p = [1]; eps = 1; I = [0, 1]; n = 4;", ParseError),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_certificate(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_certificate("f = x;\np = [1];\neps = ;\n")
    assert info.value.line == 3


def test_decimal_literals_exact():
    c = parse_certificate("f = x * 0.1; p = [0.1, -3.77e-3]; eps = 1e-20; I = [1.001, 2.14]; n = 4;")
    assert c.f == Mul(Var(), Cst(Fraction(1, 10)))
    assert c.p == Poly([Fraction(1, 10), Fraction(-377, 100000)])
    assert c.eps == Fraction(1, 10**20)
    assert c.I == Interval(Fraction(1001, 1000), Fraction(107, 50))


def test_nesting_limit():
    deep = "(" * (MAX_NESTING + 5) + "x" + ")" * (MAX_NESTING + 5)
    with pytest.raises(ParseError):
        parse_expr(deep)
    neg = "-" * (MAX_NESTING + 5) + "x"
    with pytest.raises(ParseError):
        parse_expr(neg)
    long_sum = " + ".join(["x"] * 5000)
    with pytest.raises(ParseError):
        parse_expr(long_sum)


def test_precedence():
    assert parse_expr("1 + 2 * x") == Add(Cst(1), Mul(Cst(2), Var()))
    assert parse_expr("x - 1 - 2") == Sub(Sub(Var(), Cst(1)), Cst(2))
    assert parse_expr("-(x) * 2") == Mul(Neg(Var()), Cst(2))
    assert parse_expr("x * 1/2") == Mul(Var(), Cst(Fraction(1, 2)))


def test_zero_hints():
    assert parse_zero_hints("−1/2 1/2") == [ConfInterval(Fraction(-1, 2), Fraction(1, 2))]
    assert parse_zero_hints("# comment\n0 0") == [ConfInterval(0, 0)]
    with pytest.raises(InvertedInterval):
        parse_zero_hints("1 0")
    with pytest.raises(ParseError):
        parse_zero_hints("1 2 3")
    with pytest.raises(ParseError):
        parse_zero_hints("a b")
    zs = [ConfInterval(Fraction(-3, 7), Fraction(1, 9)), ConfInterval(2, 2)]
    assert parse_zero_hints(format_zero_hints(zs)) == zs


names = st.sampled_from(["x", "radiant", "y_1", "t"])
rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**6)


def exprs(var):
    leaves = st.one_of(st.just(Var(var)), rationals.map(Cst))
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            st.tuples(kids, kids).map(lambda t: Add(*t)),
            st.tuples(kids, kids).map(lambda t: Sub(*t)),
            st.tuples(kids, kids).map(lambda t: Mul(*t)),
            kids.map(Neg),
            st.tuples(st.sampled_from(list(ElemFn)), kids).map(lambda t: App(*t)),
        ),
        max_leaves=15,
    )


@st.composite
def certificates(draw):
    var = draw(names)
    f = draw(exprs(var))
    p = Poly(draw(st.lists(rationals, max_size=8)))
    eps = draw(st.fractions(min_value=0, max_value=10, max_denominator=10**9).filter(lambda v: v > 0))
    lo = draw(rationals)
    hi = lo + draw(st.fractions(min_value=0, max_value=10, max_denominator=10**6).filter(lambda v: v > 0))
    n = draw(st.integers(min_value=1, max_value=2000))
    return Certificate(f, p, eps, Interval(lo, hi), n, var)


@settings(max_examples=300, deadline=None)
@given(certificates())
def test_certificate_round_trip(c):
    once = parse_certificate(format_certificate(c))
    assert parse_certificate(format_certificate(once)) == once
    assert format_certificate(once) == format_certificate(c)
    # every rational survives exactly
    assert once.p == c.p and once.eps == c.eps and once.I == c.I and once.n == c.n


@settings(max_examples=300, deadline=None)
@given(exprs("x"), st.fractions(min_value=-1, max_value=1, max_denominator=1000))
def test_expr_round_trip_semantics(e, x):
    back = parse_expr(format_expr(e))
    assert parse_expr(format_expr(back)) == back
    if not has_app(e):
        assert eval_expr_exact(back, x) == eval_expr_exact(e, x)


TOKENS = ["f", "p", "eps", "I", "n", "=", ";", "[", "]", "(", ")", ",", "x", "y", "sin", "tan",
          "exp", "+", "-", "*", "/", "1", "0", "1/3", "2.5e-3", "#c\n", " ", "\n", "−", "1e99999"]


def fuzz_inputs(count, seed=7):
    rng = random.Random(seed)
    base = COS_TEXT + IDENTITY
    for i in range(count):
        kind = i % 3
        if kind == 0:
            raw = bytes(rng.randrange(256) for _ in range(rng.randint(0, 80)))
            yield raw.decode("utf-8", errors="replace")
        elif kind == 1:
            yield "".join(rng.choice(TOKENS) for _ in range(rng.randint(0, 40)))
        else:
            chars = list(base)
            for _ in range(rng.randint(1, 6)):
                j = rng.randrange(len(chars))
                op = rng.randrange(3)
                if op == 0:
                    del chars[j]
                elif op == 1:
                    chars.insert(j, rng.choice(TOKENS))
                else:
                    chars[j] = chr(rng.randrange(32, 127))
            yield "".join(chars)


def test_parser_totality():
    ok = 0
    for text in fuzz_inputs(100_000):
        try:
            c = parse_certificate(text)
        except CertError:
            continue
        assert isinstance(c, Certificate)
        ok += 1
    # the mutation strategy keeps some inputs valid
    assert ok > 0


def sample_report(verdict, reason=None, with_eb=True):
    eb = ExtremalBound(Fraction(4), Fraction(63, 64), Fraction(1, 4), Fraction(127, 64)) if with_eb else None
    return CheckReport(
        verdict=verdict,
        reason=reason,
        delta1=Fraction(3, 355687428096000),
        gamma=Fraction(5, 2),
        num_zeros=1,
        zeros=(ConfInterval(Fraction(-1, 8), Fraction(1, 8)),),
        extremal=eb,
        timings={"phase1": 1.5, "phase2": 2.0},
        detail="",
    )


def test_emit_examples():
    d = json.loads(emit_report(sample_report(Verdict.CERTIFIED)))
    assert d["verdict"] == "certified"
    assert Fraction(d["bound"]) <= Fraction(d["gamma"])
    for key in ("verdict", "reason", "delta1", "gamma", "numZeros", "zeros", "B", "K", "e", "bound", "timings_ms"):
        assert key in d
    assert d["gamma_decimal"] == "2.50000000000e+0"
    r = sample_report(Verdict.NOT_CERTIFIED, "residual_negative", with_eb=False)
    d = json.loads(emit_report(r))
    assert d["verdict"] == "not_certified" and d["reason"] == "residual_negative"
    assert emit_report(r) == emit_report(r)


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from(list(Verdict)),
    st.lists(rationals, min_size=6, max_size=6),
    st.lists(st.tuples(rationals, rationals).map(sorted), max_size=5),
    st.booleans(),
)
def test_report_round_trip(verdict, vals, zs, with_eb):
    eb = ExtremalBound(*[abs(v) for v in vals[2:]]) if with_eb else None
    r = CheckReport(
        verdict=verdict,
        reason=None if verdict is Verdict.CERTIFIED else "bound_exceeds_gamma",
        delta1=abs(vals[0]),
        gamma=vals[1],
        num_zeros=len(zs),
        zeros=tuple(ConfInterval(u, v) for u, v in zs),
        extremal=eb,
        timings={"phase1": 0.25},
        detail="x",
    )
    back = parse_report(emit_report(r))
    assert back == r
