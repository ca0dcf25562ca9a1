"""binary64 <-> raw bit pattern helpers."""

import struct

__all__ = ["bits_to_float", "float_to_bits"]


def float_to_bits(f: float) -> int:
    return struct.unpack("<Q", struct.pack("<d", f))[0]


def bits_to_float(u: int) -> float:
    return struct.unpack("<d", struct.pack("<Q", u))[0]
