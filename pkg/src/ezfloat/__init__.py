"""Correctly rounded conversions between decimal text and IEEE-754 binary64.

Reading picks the nearest double with a single round-half-to-even integer
division; writing emits the minimal-digit scientific notation that reads
back bit-identically.  An independent exact oracle, audits and a benchmark
harness round out the package.
"""

from ._bits import bits_to_float, float_to_bits
from .bigmath import (
    DBL_MANT_DIG,
    LLOG2,
    MAX_POW,
    POWER_TABLES,
    ConversionStats,
    PowerTables,
    power_of_5,
    power_of_10,
    round_quotient,
    round_quotient_big,
)
from .oracle import (
    AuditReport,
    ExactRational,
    IntermediateSizeReport,
    all_ones_mantissa_values,
    intermediate_size_scan,
    minimality_check,
    nearest_double_exact,
    quotient_length_audit,
)
from .reader import (
    DecimalSci,
    ParseError,
    ReadOutcome,
    mant_exp_to_double5,
    mant_exp_to_double10,
    parse_decimal,
    read_double,
    read_double_with_stats,
)
from .writer import (
    FloatKind,
    ShortestDigits,
    UnpackedDouble,
    double_to_string,
    double_to_string_fast,
    estimate_point,
    format_sci,
    shortest_digits,
    unpack_double,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "ConversionStats",
    "DBL_MANT_DIG",
    "DecimalSci",
    "ExactRational",
    "FloatKind",
    "IntermediateSizeReport",
    "LLOG2",
    "MAX_POW",
    "POWER_TABLES",
    "ParseError",
    "PowerTables",
    "ReadOutcome",
    "ShortestDigits",
    "UnpackedDouble",
    "all_ones_mantissa_values",
    "bits_to_float",
    "double_to_string",
    "double_to_string_fast",
    "estimate_point",
    "float_to_bits",
    "format_sci",
    "intermediate_size_scan",
    "mant_exp_to_double5",
    "mant_exp_to_double10",
    "minimality_check",
    "nearest_double_exact",
    "parse_decimal",
    "power_of_5",
    "power_of_10",
    "quotient_length_audit",
    "read_double",
    "read_double_with_stats",
    "round_quotient",
    "round_quotient_big",
    "shortest_digits",
    "unpack_double",
]
