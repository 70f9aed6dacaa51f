"""Growth-rate comparison between a claimed quadratic cycle bound and a
constructed family of vector fields.

The claimed bound says a degree-n polynomial field admits at most
2(n-1)(4(n-1)-2) limit cycles.  The constructed family realises, at degree
2^k - 1, a cycle count of 4^(k-1)*(k - 13/6) + 2^k - 1/3, which is an
integer for every k >= 2 and grows like 4^k * k.  Since the claimed bound
at degree 2^k - 1 grows only like 8 * 4^k, the construction must
eventually exceed it.  This module computes both sequences in exact
rational arithmetic and finds the first k where the contradiction
appears, plus a numeric crossover routine for comparing the logarithmic
lower envelope (n+2)^2 * log2(n+2) / 2 against arbitrary quadratics.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

import mpmath

__all__ = [
    "GrowthRow",
    "claimed_quadratic_bound",
    "constructed_cycle_count",
    "contradiction_threshold",
    "log_bound_crossover",
    "comparison_rows",
    "render_comparison",
]

_DEFAULT_BITS = 80
_MAX_BITS = 1280


def claimed_quadratic_bound(n: int) -> int:
    """The claimed maximum number of limit cycles at degree n.

    Defined as 2(n-1)(4(n-1)-2) for integer n >= 2.  Expanded this is
    8n^2 - 20n + 12, a quadratic in the degree.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("degree must be an int, got %r" % (n,))
    if n < 2:
        raise ValueError("the claimed bound is defined for degree n >= 2, got %d" % n)
    m = n - 1
    return 2 * m * (4 * m - 2)


def constructed_cycle_count(k: int) -> int:
    """Number of limit cycles realised by the constructed field at
    degree 2^k - 1.

    The closed form is 4^(k-1) * (k - 13/6) + 2^k - 1/3.  Although two
    of the terms are fractional, their sum is an integer for every
    k >= 2: 13 * 4^(k-1) + 2 is divisible by 6 exactly when 4^(k-1) is
    congruent to 4 mod 6, which holds for all k >= 2.  The integrality
    is asserted, not assumed.
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("index must be an int, got %r" % (k,))
    if k < 2:
        raise ValueError("the constructed count is defined for k >= 2, got %d" % k)
    value = Fraction(4) ** (k - 1) * (Fraction(k) - Fraction(13, 6)) + 2 ** k - Fraction(1, 3)
    if value.denominator != 1:
        # Internal consistency guard.  The congruence argument above makes
        # this unreachable; if it ever fires the closed form was mistyped.
        raise ArithmeticError(
            "constructed cycle count came out non-integral at k=%d: %s" % (k, value)
        )
    return value.numerator


def _exceeds(k: int) -> bool:
    return constructed_cycle_count(k) > claimed_quadratic_bound(2 ** k - 1)


def contradiction_threshold(*, method: str = "scan") -> int:
    """Smallest k >= 2 at which the constructed count exceeds the claimed
    bound evaluated at degree 2^k - 1.

    The arithmetic is exact throughout, so the answer carries no
    floating-point caveat.  After the threshold is found, every k up to
    twice the threshold is re-checked to confirm the excess persists;
    a failure there would mean the comparison is not monotone where we
    rely on it and raises ArithmeticError.

    method selects the search strategy: "scan" walks k upward from 2,
    "bisect" brackets by doubling and then binary-searches.  Both must
    return the same k; the second exists so tests can check that the
    answer does not depend on the search order.
    """
    if method == "scan":
        k = 2
        while not _exceeds(k):
            k += 1
        threshold = k
    elif method == "bisect":
        hi = 2
        while not _exceeds(hi):
            hi *= 2
        lo = hi // 2  # _exceeds(lo) is False unless hi == 2
        if hi == 2:
            threshold = 2
        else:
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if _exceeds(mid):
                    hi = mid
                else:
                    lo = mid
            threshold = hi
    else:
        raise ValueError("method must be 'scan' or 'bisect', got %r" % (method,))

    for k in range(threshold, 2 * threshold + 1):
        if not _exceeds(k):
            raise ArithmeticError(
                "excess fails to persist at k=%d beyond threshold %d" % (k, threshold)
            )
    return threshold


def _working_bits(bits: int | None) -> int:
    if bits is not None:
        if bits < 16:
            raise ValueError("precision must be at least 16 bits, got %d" % bits)
        return bits
    env = os.environ.get("CCLAB_PRECISION_BITS")
    if env:
        value = int(env)
        if value < 16:
            raise ValueError("CCLAB_PRECISION_BITS must be at least 16, got %d" % value)
        return value
    return _DEFAULT_BITS


def _last_crossing(a: Fraction, b: Fraction, c: Fraction, bits: int) -> int:
    """Largest n with (n+2)^2*log2(n+2)/2 <= a*n^2 + b*n + c, plus one.

    Returns 0 when the envelope already dominates at every n >= 0.  The
    scan stops once the margin is provably permanent: past the point
    where the envelope's second difference exceeds 2a the difference
    envelope-minus-quadratic is convex, so being positive and
    non-decreasing there means it stays positive forever.  When that
    convexity point is absurdly far out (huge a) a doubling margin past
    the last observed crossing is used instead.
    """
    with mpmath.workprec(bits):
        two_ln2 = 2 * mpmath.ln(2)
        af = mpmath.mpf(a.numerator) / a.denominator
        bf = mpmath.mpf(b.numerator) / b.denominator
        cf = mpmath.mpf(c.numerator) / c.denominator

        # ln(n+2) > 2a*ln2 - 3/2 makes the envelope's second derivative
        # exceed the quadratic's.
        exponent = 2 * float(a) * math.log(2) - 1.5
        convex_from = math.exp(exponent) - 2 if exponent < 16 else float("inf")
        use_convexity = convex_from <= 2 ** 22

        last_fail = -1
        prev_h = None
        n = 0
        while True:
            envelope = (n + 2) ** 2 * mpmath.ln(n + 2) / two_ln2
            h = envelope - (af * n * n + bf * n + cf)
            if h <= 0:
                last_fail = n
            if h > 0 and prev_h is not None and h >= prev_h:
                if use_convexity:
                    if n > convex_from:
                        return last_fail + 1
                elif n > max(2 * (last_fail + 1), 4096):
                    return last_fail + 1
            elif not use_convexity and h > 0 and n > max(4 * (last_fail + 1), 1 << 21):
                return last_fail + 1
            prev_h = h
            n += 1


def log_bound_crossover(a, b, c, *, bits: int | None = None) -> int:
    """Smallest n such that (m+2)^2 * log2(m+2) / 2 > a*m^2 + b*m + c for
    every m >= n.

    The quadratic must open upward or be linear (a >= 0); coefficients
    may be any rationals.  Returns 0 when the logarithmic envelope
    dominates from the start.  The comparison is floating point by
    necessity (the envelope involves a logarithm), so the result is
    recomputed at doubled precision until two consecutive precisions
    agree; the starting precision is 80 bits unless overridden by the
    bits argument or the CCLAB_PRECISION_BITS environment variable.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a < 0:
        raise ValueError("quadratic coefficient must be nonnegative, got %s" % a)
    start = _working_bits(bits)
    result = _last_crossing(a, b, c, start)
    current = start
    while current < _MAX_BITS:
        doubled = _last_crossing(a, b, c, current * 2)
        if doubled == result:
            return result
        result = doubled
        current *= 2
    raise ArithmeticError(
        "crossover for %s*n^2 + %s*n + %s failed to stabilise below %d bits"
        % (a, b, c, _MAX_BITS)
    )


@dataclass(frozen=True)
class GrowthRow:
    """One row of the growth comparison table."""

    k: int
    degree: int
    constructed: int
    claimed: int
    contradiction: bool


def comparison_rows(k_hi: int, k_lo: int = 2) -> tuple[GrowthRow, ...]:
    """Exact comparison table rows for k in [k_lo, k_hi]."""
    if k_lo < 2:
        raise ValueError("table starts at k >= 2, got %d" % k_lo)
    if k_hi < k_lo:
        raise ValueError("empty table range [%d, %d]" % (k_lo, k_hi))
    rows = []
    for k in range(k_lo, k_hi + 1):
        degree = 2 ** k - 1
        constructed = constructed_cycle_count(k)
        claimed = claimed_quadratic_bound(degree)
        rows.append(GrowthRow(k, degree, constructed, claimed, constructed > claimed))
    return tuple(rows)


def render_comparison(rows: tuple[GrowthRow, ...]) -> str:
    """Plain-text table with one line per k."""
    header = ("k", "degree", "constructed", "claimed", "exceeds")
    cells = [header]
    for row in rows:
        cells.append(
            (
                str(row.k),
                str(row.degree),
                str(row.constructed),
                str(row.claimed),
                "yes" if row.contradiction else "no",
            )
        )
    widths = [max(len(line[col]) for line in cells) for col in range(5)]
    lines = []
    for line in cells:
        lines.append("  ".join(text.rjust(width) for text, width in zip(line, widths)))
    return "\n".join(lines)
