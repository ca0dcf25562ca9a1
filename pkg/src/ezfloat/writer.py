"""binary64 to the shortest scientific-notation string that reads back exactly.

The first rounding division aims at the fewest digits the binary exponent
allows; if that starved guess fails to read back to the original bit
pattern, one more digit of precision is taken.  Two attempts all but
always suffice, so a write costs at most four rounding divisions
including the read-back check.
One wrinkle: just above a binade boundary the read-back interval is only a
quarter ulp wide on the low side, and the second attempt's half-even
rounding can land there; the neighbouring candidate is then the shortest
form and is taken instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ._bits import float_to_bits
from .bigmath import (
    LLOG2,
    ConversionStats,
    power_of_5,
    round_quotient,
    round_quotient_counted,
)
from .reader import mant_exp_to_double5

__all__ = [
    "FloatKind",
    "ShortestDigits",
    "UnpackedDouble",
    "double_to_string",
    "double_to_string_fast",
    "estimate_point",
    "format_sci",
    "shortest_digits",
    "unpack_double",
]


class FloatKind(Enum):
    ZERO = "zero"
    SUBNORMAL = "subnormal"
    NORMAL = "normal"
    INFINITE = "infinite"
    NAN = "nan"


@dataclass(frozen=True)
class UnpackedDouble:
    """Sign, integer significand and binary exponent: |value| = lmant * 2**e2.

    Normals carry the implicit bit (2**52 <= lmant < 2**53); subnormals and
    zero sit at the fixed scale e2 = -1074.  For NaN, lmant holds the raw
    payload and e2 is 0.
    """

    negative: bool
    lmant: int
    e2: int
    kind: FloatKind


@dataclass(frozen=True)
class ShortestDigits:
    """Decimal significand as an integer: |value| reads back from lquo * 10**point."""

    lquo: int
    point: int


def unpack_double(f: float) -> UnpackedDouble:
    bits = float_to_bits(f)
    negative = bool(bits >> 63)
    ue2 = (bits >> 52) & 0x7FF
    frac = bits & ((1 << 52) - 1)
    if ue2 == 0x7FF:
        return UnpackedDouble(negative, frac, 0, FloatKind.NAN if frac else FloatKind.INFINITE)
    # Biased exponent 0 means no implicit bit and a one-higher scale.
    e2 = ue2 - 1075 + (1 if ue2 == 0 else 0)
    if ue2 == 0:
        kind = FloatKind.ZERO if frac == 0 else FloatKind.SUBNORMAL
        return UnpackedDouble(negative, frac, e2, kind)
    return UnpackedDouble(negative, frac + (1 << 52), e2, FloatKind.NORMAL)


def estimate_point(e2: int) -> int:
    """ceil(e2 * log10(2)): the unique p with 10**(p-1) < 2**e2 <= 10**p.

    Exact for every binary64 exponent (verified by integer comparison over
    [-1100, 1100] in the test suite).
    """
    return math.ceil(e2 * LLOG2)


def shortest_digits(
    f: float, stats: ConversionStats | None = None, skip_first: bool = False
) -> ShortestDigits:
    """Shortest (lquo, point) with read-back equal to |f| bit for bit.

    ``skip_first`` trades the minimal-digit guarantee for one fewer
    division by starting directly at the extra-digit attempt.
    """
    u = unpack_double(f)
    if u.kind not in (FloatKind.NORMAL, FloatKind.SUBNORMAL):
        raise ValueError("shortest_digits requires a finite nonzero value")
    af = abs(f)
    lmant = u.lmant
    e2 = u.e2
    point = estimate_point(e2)
    shifting = e2 > 0
    if shifting:
        num = lmant << (e2 - point)
        den = power_of_5(point)
    else:
        num = lmant * power_of_5(-point)
        den = 1 << (point - e2)
    if not skip_first:
        lquo = round_quotient_counted("write-attempt", num, den, stats)
        if mant_exp_to_double5(lquo, point, stats) == af:
            return _checked(lquo, point)
    # One more digit: the effective power-of-10 divisor shrinks tenfold.
    point -= 1
    if shifting:
        num <<= 1
        den = power_of_5(point)
    else:
        num *= 10
    lquo = round_quotient_counted("write-attempt", num, den, stats)
    if mant_exp_to_double5(lquo, point) == af:
        return _checked(lquo, point)
    return _boundary_fallback(af, num, den, lquo, point, shifting)


def _boundary_fallback(
    af: float, num: int, den: int, lquo: int, point: int, shifting: bool
) -> ShortestDigits:
    # Only reachable for values whose significand is exactly 2**52: just
    # above a binade boundary the read-back interval is a quarter ulp wide
    # below and a half ulp above, so the half-even quotient of the second
    # attempt can land outside it.  Either the neighbouring candidate at the
    # same digit count is the shortest form (2**-24), or no decimal of this
    # length lies in the interval at all and one more digit is needed
    # (2**-1011).  Seventeen digits always succeed.
    for _ in range(2):
        rem = num - lquo * den
        if rem:
            sibling = lquo + (1 if rem > 0 else -1)
            if mant_exp_to_double5(sibling, point) == af:
                return _checked(sibling, point)
        point -= 1
        if shifting:
            num <<= 1
            den = power_of_5(point)
        else:
            num *= 10
        lquo = round_quotient(num, den)
        if mant_exp_to_double5(lquo, point) == af:
            return _checked(lquo, point)
    raise AssertionError(f"shortest-digits candidates exhausted for {af!r}")


def _checked(lquo: int, point: int) -> ShortestDigits:
    assert 0 < lquo < 10**17, "decimal significand out of range"
    return ShortestDigits(lquo, point)


def format_sci(negative: bool, lquo: int, point: int, compat: bool = False) -> str:
    """Render lquo * 10**point as d.dddEn with trailing zeros trimmed.

    A single-digit significand is padded to "d.0" unless ``compat`` asks
    for the bare "d." form.  The exponent is point plus the untrimmed
    digit count minus one, printed without a plus sign.
    """
    sman = str(lquo)
    length = len(sman)
    lent = length
    while sman[lent - 1] == "0":
        lent -= 1
    head = "-" + sman[0] if negative else sman[0]
    if lent > 1:
        body = sman[1:lent]
    else:
        body = "" if compat else "0"
    return f"{head}.{body}E{point + length - 1}"


def double_to_string(
    f: float,
    compat: bool = False,
    skip_first: bool = False,
    stats: ConversionStats | None = None,
) -> str:
    """Shortest scientific notation whose read-back is bit-identical to f.

    ``compat`` restores two legacy behaviours: negative zero prints as
    "0.0" and single-digit significands drop the padded fractional zero.
    """
    if f != f:
        return "NaN"
    if f == math.inf:
        return "Infinity"
    if f == -math.inf:
        return "-Infinity"
    if f == 0.0:
        if not compat and math.copysign(1.0, f) < 0:
            return "-0.0"
        return "0.0"
    sd = shortest_digits(f, stats, skip_first)
    return format_sci(f < 0, sd.lquo, sd.point, compat)


# Conservative 63-bit-arithmetic guards for the fast path: the dividend must
# stay narrow even after the extra-digit retry doubles or decuples it.
_FAST_SHIFT_MAX = 9
_FAST_POW5_MAX = 27
_FAST_NUM_MAX = 1 << 59


def double_to_string_fast(f: float, compat: bool = False) -> str:
    """double_to_string via machine-word-sized integers when they suffice.

    Output is byte-identical to the general routine; values whose
    intermediates would not fit in 63 bits fall back to it.
    """
    if f != f or f in (math.inf, -math.inf) or f == 0.0:
        return double_to_string(f, compat)
    u = unpack_double(f)
    af = abs(f)
    lmant = u.lmant
    e2 = u.e2
    point = estimate_point(e2)
    if e2 > 0:
        shift = e2 - point
        if shift > _FAST_SHIFT_MAX or point > _FAST_POW5_MAX:
            return double_to_string(f, compat)
        num = lmant << shift
        lquo = round_quotient(num, power_of_5(point))
        if mant_exp_to_double5(lquo, point) != af:
            point -= 1
            lquo = round_quotient(num << 1, power_of_5(point))
    else:
        if point - e2 > 62:
            return double_to_string(f, compat)
        num = lmant * power_of_5(-point)
        if num > _FAST_NUM_MAX:
            return double_to_string(f, compat)
        den = 1 << (point - e2)
        lquo = round_quotient(num, den)
        if mant_exp_to_double5(lquo, point) != af:
            point -= 1
            lquo = round_quotient(num * 10, den)
    if mant_exp_to_double5(lquo, point) != af:
        return double_to_string(f, compat)  # rare boundary repair path
    return format_sci(f < 0, lquo, point, compat)
