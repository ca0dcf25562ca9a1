"""Brute-force-exact reference conversions used to verify the fast paths.

Nothing here shares scaling or retry logic with the production reader: the
nearest-double computation works from the exact rational value, locating
the binade by integer comparison and rounding once with an exact remainder.
A bug would have to be reinvented independently on both sides to hide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ._bits import float_to_bits
from .bigmath import ConversionStats, round_quotient_big
from .reader import DecimalSci, mant_exp_to_double5, mant_exp_to_double10, parse_decimal
from .writer import double_to_string, shortest_digits

__all__ = [
    "AuditReport",
    "ExactRational",
    "IntermediateSizeReport",
    "all_ones_mantissa_values",
    "intermediate_size_scan",
    "minimality_check",
    "nearest_double_exact",
    "quotient_length_audit",
]

# Values at or beyond the midpoint between the largest finite double and
# 2**1024 round to infinity; values at or below half the smallest subnormal
# round to zero (the tie goes to the even candidate, zero, in both cases).
_OVERFLOW_BOUNDARY = (1 << 1024) - (1 << 970)


@dataclass(frozen=True)
class ExactRational:
    """(-1)**negative * num / den, unreduced; compared by cross-multiplying."""

    num: int
    den: int
    negative: bool = False

    @classmethod
    def from_decimal(cls, dec: DecimalSci) -> "ExactRational":
        if dec.point >= 0:
            return cls(dec.mant * 10**dec.point, 1, dec.negative)
        return cls(dec.mant, 10**-dec.point, dec.negative)

    @classmethod
    def from_float(cls, f: float) -> "ExactRational":
        # frexp is exact for subnormals too: |f| = m * 2**e with 0.5 <= m < 1.
        m, e = math.frexp(abs(f))
        lmant = int(m * (1 << 53))
        e2 = e - 53
        if e2 >= 0:
            return cls(lmant << e2, 1, f < 0)
        return cls(lmant, 1 << -e2, f < 0)


def nearest_double_exact(dec: DecimalSci) -> float:
    """The binary64 nearest to dec's exact value, ties to even.

    Works purely on integers: the binade of num/den is found by shifted
    comparison, then the 53 significand bits (fewer at the subnormal scale)
    come from one exact rounding division.  Overflow and underflow are
    decided by comparing against 2**1024 - 2**970 and 2**-1075 exactly.
    """
    if dec.mant == 0:
        return -0.0 if dec.negative else 0.0
    r = ExactRational.from_decimal(dec)
    a, b = r.num, r.den
    if a >= b * _OVERFLOW_BOUNDARY:
        return -math.inf if dec.negative else math.inf
    if a << 1075 <= b:
        return -0.0 if dec.negative else 0.0
    # Binade: 2**(d-1) <= a/b < 2**d.
    d = a.bit_length() - b.bit_length()
    if (a >> d if d >= 0 else a << -d) >= b:
        d += 1
    # Round at 53 bits, or at the fixed scale 2**-1074 below the normal range.
    e = max(d, -1021) - 53
    q = round_quotient_big(a << max(-e, 0), b << max(e, 0))
    assert q.bit_length() <= 54  # q <= 2**53; exact as a float either way
    value = math.ldexp(q, e)
    return -value if dec.negative else value


def _cmp_pow10(a: int, b: int, p: int) -> int:
    """Sign of a/b - 10**p."""
    if p >= 0:
        rhs = b * 10**p
        return (a > rhs) - (a < rhs)
    lhs = a * 10**-p
    return (lhs > b) - (lhs < b)


def _floor_log10(a: int, b: int) -> int:
    e = (a.bit_length() - b.bit_length()) * 30103 // 100000
    while _cmp_pow10(a, b, e + 1) >= 0:
        e += 1
    while _cmp_pow10(a, b, e) < 0:
        e -= 1
    return e


def minimality_check(f: float, produced_digits: int) -> bool:
    """True iff no decimal with fewer significant digits reads back to f.

    For every shorter digit count the two bracketing decimal neighbours of
    |f| are constructed exactly (floor and ceiling at the admissible
    decimal exponent, so a shortest form that is not the correctly rounded
    prefix is still caught) and pushed through nearest_double_exact.
    """
    if produced_digits <= 1:
        return True
    r = ExactRational.from_float(f)
    a, b = r.num, r.den
    exp10 = _floor_log10(a, b)
    target = abs(f)
    for d in range(1, produced_digits):
        p = exp10 - d + 1
        if p >= 0:
            lo = a // (b * 10**p)
        else:
            lo = (a * 10**-p) // b
        for cand in (lo, lo + 1):
            if cand <= 0:
                continue
            if nearest_double_exact(DecimalSci(False, cand, p)) == target:
                return False
    return True


def all_ones_mantissa_values() -> list[float]:
    """Every positive finite double whose significand bits are all ones.

    52 subnormals (2**k - 1 at scale 2**-1074) plus the all-ones 53-bit
    significand in each of the 2046 normal binades: 2098 values, sorted.
    """
    out = set()
    for k in range(1, 53):
        out.add(math.ldexp((1 << k) - 1, -1074))
    full = float((1 << 53) - 1)
    for biased in range(1, 2047):
        out.add(math.ldexp(full, biased - 1075))
    return sorted(out)


@dataclass
class AuditReport:
    """Outcome of the quotient-length audit over the all-ones enumeration."""

    values_tested: int = 0
    max_retries_per_conversion: int = 0
    violations: list[str] = field(default_factory=list)

    def render(self) -> str:
        lines = [f"VIOLATION {v}" for v in self.violations]
        lines.append(f"values tested: {self.values_tested}")
        lines.append(f"max retries per conversion: {self.max_retries_per_conversion}")
        lines.append(f"violations: {len(self.violations)}")
        return "\n".join(lines)

    @property
    def ok(self) -> bool:
        return not self.violations


def _scan_trace(report: AuditReport, f: float, trace: list[tuple[str, int, int, int]]) -> None:
    for site, num_bits, den_bits, quo in trace:
        qb = quo.bit_length()
        if site.endswith("-main"):
            # Power-of-5/10 divisor with num built to be 53 bits longer: a
            # quotient of 2 + n - m bits here would demand a second retry.
            if qb > num_bits - den_bits + 1:
                report.violations.append(
                    f"0x{float_to_bits(f):016X} {site} quotient {qb} bits"
                    f" from {num_bits}/{den_bits}"
                )
        elif site.endswith("-retry"):
            # After doubling the divisor the quotient must convert exactly.
            if qb > 53 and quo != 1 << 53:
                report.violations.append(
                    f"0x{float_to_bits(f):016X} {site} quotient {qb} bits"
                )
        elif site.endswith("-shift"):
            # Power-of-two divisor, outside the near-power-of-2 argument; a
            # rounding carry to exactly 2**53 converts exactly and is fine.
            if qb > 53 and quo != 1 << 53:
                report.violations.append(
                    f"0x{float_to_bits(f):016X} {site} quotient {qb} bits"
                )
        elif site == "read-subnormal":
            if qb > 52 and quo != 1 << 52:
                report.violations.append(
                    f"0x{float_to_bits(f):016X} {site} quotient {qb} bits"
                )
        elif site == "write-attempt":
            if quo >= 10**17:
                report.violations.append(
                    f"0x{float_to_bits(f):016X} write significand {quo}"
                )


def quotient_length_audit() -> AuditReport:
    """Convert every all-ones value both ways, checking quotient lengths.

    These are the extremal dividends: if any power-of-10 or power-of-5
    divisor could produce a quotient long enough to need a second retry,
    it would happen here.  Expected outcome is zero violations with at
    most one retry per conversion.
    """
    report = AuditReport()
    for f in all_ones_mantissa_values():
        text = double_to_string(f)
        dec = parse_decimal(text)
        assert isinstance(dec, DecimalSci)
        for reader in (mant_exp_to_double5, mant_exp_to_double10):
            stats = ConversionStats(trace=[])
            value = reader(dec.mant, dec.point, stats)
            if value != f:
                report.violations.append(
                    f"0x{float_to_bits(f):016X} reread mismatch via {reader.__name__}"
                )
            retries = stats.divisions - 1
            if retries > report.max_retries_per_conversion:
                report.max_retries_per_conversion = retries
            _scan_trace(report, f, stats.trace)
        wstats = ConversionStats(trace=[])
        shortest_digits(f, wstats)
        _scan_trace(report, f, wstats.trace)
        report.values_tested += 1
    return report


@dataclass
class IntermediateSizeReport:
    """Peak operand widths and division counts over a reader stress grid."""

    max_pow5_bits: int = 0
    max_pow10_bits: int = 0
    max_read_divisions: int = 0
    cells: int = 0


def intermediate_size_scan(
    points: range,
    digit_counts: range,
    rng,
    mants_per_cell: int = 2,
) -> IntermediateSizeReport:
    """Run both reader variants over a (digit count x point) grid.

    Each surviving cell (one that the read-path clamps would let through)
    contributes the extreme mantissas of its digit count plus random
    fillers.  Instrumentation records every division operand.
    """
    report = IntermediateSizeReport()
    for nd in digit_counts:
        lo = 10 ** (nd - 1)
        hi = 10**nd - 1
        for point in points:
            if point >= 309 or point + nd <= -324:
                continue  # the read path clamps these before converting
            mants = {lo, hi}
            for _ in range(mants_per_cell):
                mants.add(rng.randint(lo, hi))
            for mant in mants:
                s5 = ConversionStats()
                v5 = mant_exp_to_double5(mant, point, s5)
                s10 = ConversionStats()
                v10 = mant_exp_to_double10(mant, point, s10)
                assert float_to_bits(v5) == float_to_bits(v10)
                report.max_pow5_bits = max(report.max_pow5_bits, s5.max_intermediate_bits)
                report.max_pow10_bits = max(report.max_pow10_bits, s10.max_intermediate_bits)
                report.max_read_divisions = max(
                    report.max_read_divisions, s5.divisions, s10.divisions
                )
            report.cells += 1
    return report
