"""Exact certificate checker for polynomial approximations of elementary functions."""

from .approx import ApproxResult, approx_as_poly, eval_expr_interval, eval_expr_ref
from .cert import Certificate, emit_report, parse_certificate, parse_zero_hints
from .numerics import Interval, iv_arith, parse_rational, rat_from_decimal
from .poly import Poly, abs_coeff_bound, derivative, eval_poly, poly_compose, poly_div, poly_ring
from .sturm import count_zeros, sturm_chain, variation
from .transc import ElemFn, fn_range_bound, lipschitz_bound, pi_lower_bound, taylor_poly, taylor_rem_bound
from .validate import (
    CheckReport,
    ConfInterval,
    Verdict,
    check_certificate,
    check_err_poly,
    extremal_bound,
    isolate_roots,
    validate_zeros,
)

__version__ = "0.1.0"
