"""Certificate text format, zero-hint files and JSON reports.

A certificate is a list of ``key = value;`` statements, each key exactly
once, in any order::

    # cosine on roughly [0, 2 pi]
    f = cos(radiant);
    p = [5476237/4194304, -5340353/4194304, 1699887/8388608, 3740489/1125899906842624];
    eps = 1/4;
    I = [0, 314159265359/50000000000];
    n = 32;

Expressions use ``+``, ``-``, ``*``, parentheses, unary minus, rational or
decimal literals, a single variable and the functions exp, sin, cos, ln and
atan.  Division is not part of the language; write ``x * 1/2``.
"""

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .approx import Add, App, Cst, Mul, Neg, Sub, Var, variables
from .errors import (
    InvertedInterval,
    MalformedNumber,
    MultipleVariables,
    ParseError,
    UnknownFunction,
)
from .numerics import Interval, decimal_approx, parse_rational
from .poly import Poly
from .transc import ElemFn
from .validate import CheckReport, ConfInterval, ExtremalBound, Verdict

MAX_NESTING = 200
MAX_TERMS = 2000

FUNCTIONS = {fn.value: fn for fn in ElemFn}


@dataclass(frozen=True)
class Certificate:
    f: object
    p: Poly
    eps: Fraction
    I: Interval
    n: int
    var: str = "x"


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<num>\d+/\d+|\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/(),;=\[\]−])
    """,
    re.VERBOSE,
)


class _Tok:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col


def _tokenize(text):
    toks = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(line, col, f"a token, found {text[pos]!r}")
        kind = m.lastgroup
        s = m.group()
        if kind != "ws":
            toks.append(_Tok(kind, "-" if s == "−" else s, line, col))
        nl = s.count("\n")
        if nl:
            line += nl
            col = len(s) - s.rfind("\n")
        else:
            col += len(s)
        pos = m.end()
    toks.append(_Tok("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0
        self.depth = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, expected, tok=None, cls=ParseError):
        tok = tok or self.tok
        found = tok.text or "end of input"
        return cls(tok.line, tok.col, f"expected {expected}, found {found!r}")

    def next(self):
        t = self.tok
        self.i += 1
        return t

    def expect(self, text):
        if self.tok.text != text or self.tok.kind == "num":
            raise self.error(repr(text))
        return self.next()

    def number(self, signed=False):
        neg = False
        if signed and self.tok.text in ("-", "+"):
            neg = self.next().text == "-"
        t = self.tok
        if t.kind != "num":
            raise self.error("a rational literal")
        self.next()
        try:
            v = parse_rational(t.text)
        except MalformedNumber as exc:
            raise ParseError(t.line, t.col, f"a valid number ({exc})") from None
        return -v if neg else v

    # expr ::= term (('+'|'-') term)*
    def expr(self):
        self.depth += 1
        if self.depth > MAX_NESTING:
            raise self.error(f"nesting depth <= {MAX_NESTING}")
        e = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.next().text
            r = self.term()
            e = Add(e, r) if op == "+" else Sub(e, r)
        self.depth -= 1
        return e

    # term ::= unary ('*' unary)*
    def term(self):
        e = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            if self.tok.text == "/":
                raise self.error("'*' (division is not supported; write x * 1/2)")
            self.next()
            e = Mul(e, self.unary())
        return e

    def unary(self):
        if self.tok.kind == "op" and self.tok.text == "-":
            self.next()
            self.depth += 1
            if self.depth > MAX_NESTING:
                raise self.error(f"nesting depth <= {MAX_NESTING}")
            e = Neg(self.unary())
            self.depth -= 1
            return e
        return self.primary()

    def primary(self):
        t = self.tok
        if t.kind == "num":
            return Cst(self.number())
        if t.kind == "ident":
            self.next()
            if self.tok.text == "(" and self.tok.kind == "op":
                fn = FUNCTIONS.get(t.text)
                if fn is None:
                    raise UnknownFunction(
                        t.line, t.col, f"one of {', '.join(FUNCTIONS)}; {t.text!r} is not supported"
                    )
                self.next()
                arg = self.expr()
                self.expect(")")
                return App(fn, arg)
            if t.text in FUNCTIONS:
                raise self.error(f"'(' after function {t.text!r}")
            return Var(t.text)
        if t.kind == "op" and t.text == "(":
            self.next()
            e = self.expr()
            self.expect(")")
            return e
        raise self.error("an expression")

    def rat_list(self):
        self.expect("[")
        vals = []
        if self.tok.text == "]":
            self.next()
            return vals
        while True:
            vals.append(self.number(signed=True))
            if self.tok.text in (",", ";") and self.tok.kind == "op":
                self.next()
                continue
            self.expect("]")
            return vals

    def certificate(self):
        seen = {}
        while self.tok.kind != "eof":
            key = self.tok
            if key.kind != "ident" or key.text not in ("f", "p", "eps", "I", "n"):
                raise self.error("one of f, p, eps, I, n")
            if key.text in seen:
                raise self.error(f"a single definition of {key.text!r}", key)
            self.next()
            self.expect("=")
            if key.text == "f":
                val = self.expr()
                _check_depth(val, key)
            elif key.text == "p":
                val = Poly(self.rat_list())
            elif key.text == "eps":
                val = self.number(signed=True)
                if val <= 0:
                    raise ParseError(key.line, key.col, "eps > 0")
            elif key.text == "I":
                start = self.tok
                bounds = self.rat_list()
                if len(bounds) != 2:
                    raise ParseError(start.line, start.col, "an interval [lo, hi]")
                if not bounds[0] < bounds[1]:
                    raise ParseError(start.line, start.col, "an interval with lo < hi")
                val = Interval(*bounds)
            else:
                t = self.tok
                v = self.number()
                if v.denominator != 1 or not 1 <= v <= MAX_TERMS:
                    raise ParseError(t.line, t.col, f"a natural number 1 <= n <= {MAX_TERMS}")
                val = int(v)
            self.expect(";")
            seen[key.text] = (val, key)
        missing = [k for k in ("f", "p", "eps", "I", "n") if k not in seen]
        if missing:
            raise self.error(f"a definition of {', '.join(missing)}")
        f, ftok = seen["f"]
        names = sorted(variables(f))
        if len(names) > 1:
            raise MultipleVariables(
                ftok.line, ftok.col, f"a single variable, found {', '.join(names)}"
            )
        return Certificate(
            f=f,
            p=seen["p"][0],
            eps=seen["eps"][0],
            I=seen["I"][0],
            n=seen["n"][0],
            var=names[0] if names else "x",
        )


def expr_depth(e):
    """Height of the expression tree, computed without recursion."""
    best = 0
    stack = [(e, 1)]
    while stack:
        node, d = stack.pop()
        best = max(best, d)
        if isinstance(node, (Neg, App)):
            stack.append((node.arg, d + 1))
        elif isinstance(node, (Add, Sub, Mul)):
            stack.append((node.left, d + 1))
            stack.append((node.right, d + 1))
    return best


def _check_depth(e, tok):
    if expr_depth(e) > MAX_NESTING:
        raise ParseError(tok.line, tok.col, f"an expression of depth <= {MAX_NESTING}")


def parse_certificate(text):
    return _Parser(text).certificate()


def parse_expr(text):
    """Parse a bare expression such as ``"exp(x * 1/2) - 1"``."""
    p = _Parser(text)
    e = p.expr()
    _check_depth(e, p.toks[0])
    if p.tok.kind != "eof":
        raise p.error("end of expression")
    names = sorted(variables(e))
    if len(names) > 1:
        raise MultipleVariables(1, 1, f"a single variable, found {', '.join(names)}")
    return e


_PREC = {Add: 1, Sub: 1, Mul: 2}


def format_expr(e, prec=0):
    if isinstance(e, Cst):
        s = str(e.value)
        return f"-({s[1:]})" if e.value < 0 else s
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        return f"-({format_expr(e.arg)})"
    if isinstance(e, App):
        return f"{e.fn.value}({format_expr(e.arg)})"
    my = _PREC[type(e)]
    op = {Add: "+", Sub: "-", Mul: "*"}[type(e)]
    # left-associative: the right operand needs parentheses at equal precedence
    s = f"{format_expr(e.left, my)} {op} {format_expr(e.right, my + 1)}"
    return f"({s})" if my < prec else s


def format_certificate(cert):
    coeffs = ", ".join(str(c) for c in cert.p.coeffs)
    return (
        f"f = {format_expr(cert.f)};\n"
        f"p = [{coeffs}];\n"
        f"eps = {cert.eps};\n"
        f"I = [{cert.I.lo}, {cert.I.hi}];\n"
        f"n = {cert.n};\n"
    )


def parse_zero_hints(text):
    """One ``u v`` pair of rationals per line; ``#`` starts a comment line."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, 1, "two rationals 'u v'")
        try:
            u, v = parse_rational(parts[0]), parse_rational(parts[1])
        except MalformedNumber as exc:
            raise ParseError(lineno, 1, f"two rationals 'u v' ({exc})") from None
        if u > v:
            raise InvertedInterval(lineno, 1, f"u <= v, got {parts[0]} > {parts[1]}")
        out.append(ConfInterval(u, v))
    return out


def format_zero_hints(zeros):
    return "".join(f"{z.u} {z.v}\n" for z in zeros)


def _rat(x):
    return None if x is None else str(x)


def _dec(x):
    return None if x is None else decimal_approx(x)


def report_to_dict(r):
    eb = r.extremal
    fields = {
        "delta1": r.delta1,
        "gamma": r.gamma,
        "B": eb and eb.B,
        "K": eb and eb.K,
        "e": eb and eb.e,
        "bound": eb and eb.bound,
    }
    out = {"verdict": r.verdict.value, "reason": r.reason}
    for k, v in fields.items():
        out[k] = _rat(v)
        out[k + "_decimal"] = _dec(v)
    out["numZeros"] = r.num_zeros
    out["zeros"] = [[str(z.u), str(z.v)] for z in r.zeros]
    out["detail"] = r.detail
    out["timings_ms"] = dict(sorted(r.timings.items()))
    return out


def emit_report(r, timings=True):
    """Deterministic JSON text for a CheckReport.

    Rationals appear as exact ``num/den`` strings with a ``*_decimal``
    companion field rounded to 12 significant digits.
    """
    d = report_to_dict(r)
    if not timings:
        d["timings_ms"] = {}
    return json.dumps(d, sort_keys=True)


def parse_report(text):
    d = json.loads(text)

    def rat(key):
        return None if d.get(key) is None else Fraction(d[key])

    eb = None
    if d.get("bound") is not None:
        eb = ExtremalBound(rat("B"), rat("K"), rat("e"), rat("bound"))
    return CheckReport(
        verdict=Verdict(d["verdict"]),
        reason=d.get("reason"),
        delta1=rat("delta1"),
        gamma=rat("gamma"),
        num_zeros=d.get("numZeros", 0),
        zeros=tuple(ConfInterval(Fraction(u), Fraction(v)) for u, v in d.get("zeros", [])),
        extremal=eb,
        timings=dict(d.get("timings_ms", {})),
        detail=d.get("detail", ""),
    )
