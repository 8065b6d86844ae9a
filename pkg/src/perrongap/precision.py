"""Working-precision policy helpers for the big-float computations.

All heavy arithmetic runs on mpmath ``mpf`` values inside a ``workprec``
context.  Values keep their full mantissa when they leave the context;
only new arithmetic rounds, always at the precision of the enclosing
context, so mixed-precision expressions round at the widest precision a
caller has requested.
"""

from __future__ import annotations

import math

from mpmath import mpf, workprec  # noqa: F401  (workprec re-exported for callers)

from .errors import InvalidParams

MIN_PRECISION_BITS = 64

#: Bits of headroom between the working precision and the default residual
#: tolerance; also used by the identity tolerance of the gap analysis.
TOLERANCE_MARGIN_BITS = 48


def check_precision_bits(bits: int) -> int:
    if bits < MIN_PRECISION_BITS:
        raise InvalidParams(f"precision_bits must be >= {MIN_PRECISION_BITS}, got {bits}")
    return bits


def default_tolerance(precision_bits: int) -> mpf:
    """2^-(precision_bits - 48), an exact power of two."""
    check_precision_bits(precision_bits)
    return mpf(2) ** (-(precision_bits - TOLERANCE_MARGIN_BITS))


def decimal_digits(precision_bits: int) -> int:
    """Number of decimal digits carried when serializing a value."""
    return math.ceil(precision_bits * 0.30103)


def construction_precision_bits(m: int, ell: int, epsilon: int = 0) -> int:
    """Default working precision for the bipartite-path-clique family.

    The gap decays like (m-1)^-(2L+3) for path length L, so the working
    precision keeps roughly 96 bits below that magnitude.
    """
    path_len = 2 * ell + epsilon
    needed = math.ceil((2 * path_len + 3) * math.log2(max(m - 1, 2))) + 96
    return max(256, needed)


def identity_tolerance(precision_bits: int, n: int, lam) -> mpf:
    """Absolute tolerance for exact-identity checks: n * lambda * 2^-(P-48).

    The identities hold exactly in exact arithmetic; the budget covers
    first-order propagation of the residual and rounding through the
    quadratic forms.
    """
    with workprec(precision_bits):
        return mpf(n) * lam * default_tolerance(precision_bits)
