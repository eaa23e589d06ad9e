"""SHA-256 based KDF, the scalar hash h and the map-to-point hash H.

Both hashes run the same rejection loop over counter-suffixed KDF outputs of
``|n| = n.bit_length()`` bits; they differ by a one-byte domain tag. The tag
bytes and the 4-byte KDF block counter are part of the signature format.
"""

from __future__ import annotations

import hashlib
import math

from . import opcount
from .curve import CurveParams, Point, scalar_mul

TAG_SCALAR = b"\x01"
TAG_POINT = b"\x02"

MAX_ITERATIONS = 1000


class HashingError(RuntimeError):
    pass


def kdf(message: bytes, bits: int) -> int:
    """First ``bits`` bits of SHA-256(message || c0) || SHA-256(message || c1) || ..., as a big-endian int.

    c_j is the 4-byte big-endian block counter.
    """
    if bits < 1:
        raise ValueError("kdf output length must be at least one bit")
    nbytes = (bits + 7) // 8
    out = bytearray()
    block = 0
    while len(out) < nbytes:
        out += hashlib.sha256(message + block.to_bytes(4, "big")).digest()
        block += 1
    return int.from_bytes(out[:nbytes], "big") >> (8 * nbytes - bits)


def counter_suffix(i: int) -> bytes:
    """Byte encoding of the i-th loop suffix: a zero byte for 0, else minimal big-endian bytes of i."""
    if i < 0:
        raise ValueError("counter must be non-negative")
    if i == 0:
        return b"\x00"
    return i.to_bytes((i.bit_length() + 7) // 8, "big")


def _rejection_loop(tag: bytes, message: bytes, n: int, accept) -> tuple[int, int]:
    bits = n.bit_length()
    for i in range(MAX_ITERATIONS):
        k = kdf(tag + message + counter_suffix(i), bits)
        if accept(k):
            return k, i + 1
    raise HashingError(f"no acceptable value after {MAX_ITERATIONS} iterations")


def hash_scalar(message: bytes, n: int) -> int:
    """h(m) in [0, n)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    k, _ = _rejection_loop(TAG_SCALAR, message, n, lambda k: k < n)
    return k


def map_to_scalar(message: bytes, n: int) -> tuple[int, int]:
    """Discrete log of H(m) to the base point, and the number of loop iterations it took.

    Only units modulo n are accepted, so H(m) always has exact order n.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    return _rejection_loop(TAG_POINT, message, n, lambda k: 0 < k < n and math.gcd(k, n) == 1)


def map_to_point(message: bytes, P: Point, n: int, curve: CurveParams) -> Point:
    k, _ = map_to_scalar(message, n)
    opcount.record("map_to_point")
    return scalar_mul(k, P, curve, op="map_to_point_mul")
