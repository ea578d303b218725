"""Exception hierarchy.

Every failure the checker can report derives from :class:`CertError` and
carries a machine-readable ``code`` used in JSON reports.
"""


class CertError(Exception):
    code = "error"
    hint = ""

    def __init__(self, message="", hint=None):
        super().__init__(message)
        if hint is not None:
            self.hint = hint


class MalformedNumber(CertError, ValueError):
    code = "malformed_number"


class DivisionByZeroPoly(CertError, ZeroDivisionError):
    code = "division_by_zero_poly"


class PrecondViolation(CertError):
    code = "precond_violation"
    hint = "shrink the interval so every function argument meets its series precondition"

    def __init__(self, fn, interval, reason):
        self.fn = fn
        self.interval = interval
        self.reason = reason
        super().__init__(f"{fn} on {interval}: {reason}")


class SinCosErrorTooLarge(CertError):
    code = "sincos_error_too_large"
    hint = "increase n so the inner approximation error drops below pi/2"


class DegreeTooSmall(CertError, ValueError):
    code = "degree_too_small"


class NotSquarefree(CertError):
    code = "not_squarefree"
    hint = "the error polynomial derivative has a repeated root; perturb p or the interval"


class EndpointZero(CertError):
    code = "endpoint_zero"
    hint = "shrink or shift the interval so the derivative does not vanish at an endpoint"


class OracleDepthExceeded(CertError):
    code = "oracle_depth_exceeded"
    hint = "raise --max-depth or supply zero hints"


class ZeroValidationFailed(CertError):
    code = "zero_validation_failed"
    hint = "zero hints must be disjoint sign-change intervals, one per root"

    def __init__(self, index, reason):
        self.index = index
        self.reason = reason
        where = "interval list" if index is None else f"interval #{index}"
        super().__init__(f"{where}: {reason}")


class ParseError(CertError, ValueError):
    code = "parse_error"

    def __init__(self, line, col, expected):
        self.line = line
        self.col = col
        self.expected = expected
        super().__init__(f"line {line}, col {col}: {expected}")


class MultipleVariables(ParseError):
    code = "multiple_variables"


class UnknownFunction(ParseError):
    code = "unknown_function"


class InvertedInterval(ParseError):
    code = "inverted_interval"
