"""Command-line driver.

    polycert check CERT... [--zeros FILE] [--json] [--report PATH] [--jobs N]
                           [--max-depth N] [--pi-terms N]
    polycert gen --fn EXPR --lo R --hi R --deg D [--out PATH] [--samples N]

``check`` exits 0 when every certificate is certified, 1 when some
certificate is refuted, and 2 on unreadable input or when the checker could
not reach a verdict.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .approx import DEFAULT_PI_TERMS, variables
from .cert import (
    Certificate,
    format_certificate,
    parse_certificate,
    parse_expr,
    parse_zero_hints,
    report_to_dict,
)
from .chebyshev import gen_certificate_parts
from .errors import CertError
from .numerics import Interval, decimal_approx, parse_rational
from .validate import DEFAULT_MAX_DEPTH, Verdict, check_certificate

EXIT_OK, EXIT_REFUTED, EXIT_ERROR = 0, 1, 2


@dataclass
class CliConfig:
    command: str
    cert_paths: list = field(default_factory=list)
    zeros_path: str = None
    report_path: str = None
    json_output: bool = False
    oracle_depth_max: int = DEFAULT_MAX_DEPTH
    pi_terms: int = DEFAULT_PI_TERMS
    parallelism: int = 1

    def __post_init__(self):
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _summary(path, r):
    if r.verdict is Verdict.CERTIFIED:
        eb = r.extremal
        return (
            f"{path}: CERTIFIED  bound={decimal_approx(eb.bound)} <= "
            f"gamma={decimal_approx(r.gamma)}  delta1={decimal_approx(r.delta1)}  "
            f"zeros={r.num_zeros}"
        )
    if r.verdict is Verdict.NOT_CERTIFIED:
        extra = ""
        if r.extremal is not None:
            extra = f"  bound={decimal_approx(r.extremal.bound)} > gamma={decimal_approx(r.gamma)}"
        elif r.gamma is not None:
            extra = f"  gamma={decimal_approx(r.gamma)} < 0"
        return f"{path}: NOT CERTIFIED ({r.reason}){extra}"
    return f"{path}: ERROR ({r.reason}) {r.detail}"


def check_one(path, hints_text, max_depth, pi_terms, json_output):
    """Check one file; returns ``(exit_code, output_text, report_dict)``.

    Module-level so it can run in a worker process.
    """
    try:
        cert = parse_certificate(_read(path))
        hints = parse_zero_hints(hints_text) if hints_text is not None else None
    except OSError as exc:
        return EXIT_ERROR, f"{path}: cannot read: {exc}", None
    except UnicodeDecodeError as exc:
        return EXIT_ERROR, f"{path}: not UTF-8 text: {exc}", None
    except CertError as exc:
        return EXIT_ERROR, f"{path}: {exc.code}: {exc}", None
    r = check_certificate(cert, hints=hints, max_depth=max_depth, pi_terms=pi_terms)
    d = report_to_dict(r)
    d["file"] = path
    text = json.dumps(d, sort_keys=True) if json_output else _summary(path, r)
    code = {
        Verdict.CERTIFIED: EXIT_OK,
        Verdict.NOT_CERTIFIED: EXIT_REFUTED,
        Verdict.ERROR: EXIT_ERROR,
    }[r.verdict]
    return code, text, d


def cmd_check(cfg, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    hints_text = None
    if cfg.zeros_path is not None:
        try:
            hints_text = _read(cfg.zeros_path)
            parse_zero_hints(hints_text)
        except (OSError, UnicodeDecodeError) as exc:
            print(f"{cfg.zeros_path}: cannot read: {exc}", file=err)
            return EXIT_ERROR
        except CertError as exc:
            print(f"{cfg.zeros_path}: {exc.code}: {exc}", file=err)
            return EXIT_ERROR
    args = [
        (p, hints_text, cfg.oracle_depth_max, cfg.pi_terms, cfg.json_output)
        for p in cfg.cert_paths
    ]
    if cfg.parallelism > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            results = list(pool.map(check_one, *zip(*args)))
    else:
        results = [check_one(*a) for a in args]
    codes = []
    reports = []
    for code, text, d in results:
        codes.append(code)
        print(text, file=err if d is None else out)
        if d is not None:
            reports.append(d)
    if cfg.report_path is not None:
        with open(cfg.report_path, "w", encoding="utf-8") as fh:
            json.dump(reports, fh, sort_keys=True, indent=1)
            fh.write("\n")
    return max(codes, default=EXIT_OK)


def cmd_gen(fn_text, lo, hi, deg, out_path=None, samples=1000, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        e = parse_expr(fn_text)
        a, b = parse_rational(lo), parse_rational(hi)
        if not a < b:
            raise ValueError(f"need lo < hi, got {lo} >= {hi}")
        if deg < 1:
            raise ValueError("need deg >= 1")
        iv = Interval(a, b)
        p, eps, n = gen_certificate_parts(e, iv, deg, samples)
    except (CertError, ValueError) as exc:
        print(f"gen: {exc}", file=err)
        return EXIT_ERROR
    names = sorted(variables(e))
    cert = Certificate(e, p, eps, iv, n, names[0] if names else "x")
    text = f"# generated: degree-{deg} Chebyshev interpolant of {fn_text} on [{lo}, {hi}]\n"
    text += format_certificate(cert)
    if out_path is None:
        out.write(text)
    else:
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"gen: cannot write {out_path}: {exc}", file=err)
            return EXIT_ERROR
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="polycert", description="Exact checker for polynomial approximation certificates."
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check one or more certificate files")
    c.add_argument("certs", nargs="+", metavar="CERT")
    c.add_argument("--zeros", metavar="FILE", help="zero hints for h' (one 'u v' per line)")
    c.add_argument("--json", action="store_true", help="print one JSON report per line")
    c.add_argument("--report", metavar="PATH", help="write all reports as a JSON array")
    c.add_argument("--jobs", type=int, default=1, metavar="N")
    c.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH, metavar="N")
    c.add_argument("--pi-terms", type=int, default=DEFAULT_PI_TERMS, metavar="N")

    g = sub.add_parser("gen", help="generate a certificate by Chebyshev interpolation")
    g.add_argument("--fn", required=True, metavar="EXPR")
    g.add_argument("--lo", required=True)
    g.add_argument("--hi", required=True)
    g.add_argument("--deg", required=True, type=int)
    g.add_argument("--out", metavar="PATH")
    g.add_argument("--samples", type=int, default=1000)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    if args.command == "check":
        if args.jobs < 1 or args.max_depth < 1 or args.pi_terms < 1:
            print("check: --jobs, --max-depth and --pi-terms must be >= 1", file=sys.stderr)
            return EXIT_ERROR
        cfg = CliConfig(
            command="check",
            cert_paths=args.certs,
            zeros_path=args.zeros,
            report_path=args.report,
            json_output=args.json,
            oracle_depth_max=args.max_depth,
            pi_terms=args.pi_terms,
            parallelism=args.jobs,
        )
        return cmd_check(cfg)
    return cmd_gen(args.fn, args.lo, args.hi, args.deg, args.out, args.samples)


if __name__ == "__main__":
    sys.exit(main())
