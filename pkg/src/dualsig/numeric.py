"""Integer and modular arithmetic, primality, and the field F_p^2 = F_p[i]/(i^2 + 1).

Python ints are the natural-number type throughout. Elements of F_p^2 are
plain ``(u, v)`` tuples standing for ``u + v*i``.
"""

from __future__ import annotations

import hashlib
import math

Fp2 = tuple[int, int]

FP2_ZERO: Fp2 = (0, 0)
FP2_ONE: Fp2 = (1, 0)

DEFAULT_ROUNDS = 64

_SMALL_PRIMES = [q for q in range(2, 1000) if all(q % d for d in range(2, math.isqrt(q) + 1))]

# Bases 2..41 are a proven deterministic Miller-Rabin witness set below this bound.
_DETERMINISTIC_BOUND = 3317044064679887385961981
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class NotInvertibleError(ArithmeticError):
    """Raised by :func:`mod_inv` when the operand shares a factor with the modulus."""

    def __init__(self, x: int, modulus: int, gcd: int):
        super().__init__(f"{x} is not invertible modulo {modulus} (gcd={gcd})")
        self.x = x
        self.modulus = modulus
        self.gcd = gcd


class NoSquareRootError(ArithmeticError):
    pass


def _check_modulus(modulus: int) -> None:
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")


def mod_pow(base: int, exp: int, modulus: int) -> int:
    _check_modulus(modulus)
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return pow(base, exp, modulus)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def mod_inv(x: int, modulus: int) -> int:
    _check_modulus(modulus)
    g = math.gcd(x, modulus)
    if g != 1:
        raise NotInvertibleError(x, modulus, g)
    return pow(x, -1, modulus)


def legendre(x: int, p: int) -> int:
    """Legendre symbol by Euler's criterion; returns -1, 0 or 1."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"legendre needs an odd prime, got {p}")
    t = pow(x, (p - 1) // 2, p)
    if t == p - 1:
        return -1
    return t


def sqrt_mod(x: int, p: int) -> int:
    """Square root modulo a prime p = 3 (mod 4); the smaller of the two roots is returned."""
    if p % 4 != 3:
        raise ValueError("sqrt_mod requires p = 3 (mod 4)")
    x %= p
    z = pow(x, (p + 1) // 4, p)
    if z * z % p != x:
        raise NoSquareRootError(f"{x} is not a square modulo {p}")
    return min(z, p - z)


def _miller_rabin_round(k: int, d: int, s: int, base: int) -> bool:
    x = pow(base, d, k)
    if x == 1 or x == k - 1:
        return True
    for _ in range(s - 1):
        x = x * x % k
        if x == k - 1:
            return True
    return False


def _derived_bases(k: int, rounds: int):
    # Bases are a hash of the candidate: reproducible, yet not a fixed set an adversary can target.
    width = (k.bit_length() + 7) // 8 + 8
    seed = k.to_bytes((k.bit_length() + 7) // 8 or 1, "big")
    for i in range(rounds):
        stream = b""
        block = 0
        while len(stream) < width:
            stream += hashlib.sha256(seed + i.to_bytes(4, "big") + block.to_bytes(4, "big")).digest()
            block += 1
        yield 2 + int.from_bytes(stream[:width], "big") % (k - 3)


def is_prime(k: int, rounds: int = DEFAULT_ROUNDS) -> bool:
    """Trial division by small primes, then Miller-Rabin.

    Below 3.3e24 a fixed base set makes the answer exact. Above it, ``rounds``
    bases are derived deterministically from ``k``, giving a false-positive rate
    under 4**-rounds without consuming any randomness.
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    if k < 2:
        return False
    for q in _SMALL_PRIMES:
        if k == q:
            return True
        if k % q == 0:
            return False
    if k < _SMALL_PRIMES[-1] ** 2:
        return True
    d, s = k - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if k < _DETERMINISTIC_BOUND:
        bases = _DETERMINISTIC_BASES
    else:
        bases = _derived_bases(k, rounds)
    return all(_miller_rabin_round(k, d, s, a) for a in bases)


def next_prime(k: int) -> int:
    """Smallest prime >= k."""
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


def to_hex(x: int) -> str:
    if x < 0:
        raise ValueError("only natural numbers have a hex encoding")
    return format(x, "x")


def from_hex(text: str) -> int:
    text = text.strip()
    if not text or any(c not in "0123456789abcdefABCDEF" for c in text):
        raise ValueError(f"not a hex natural number: {text!r}")
    return int(text, 16)


# F_p^2 arithmetic.

def fp2(u: int, v: int, p: int) -> Fp2:
    return (u % p, v % p)


def fp2_add(x: Fp2, y: Fp2, p: int) -> Fp2:
    return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)


def fp2_sub(x: Fp2, y: Fp2, p: int) -> Fp2:
    return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)


def fp2_neg(x: Fp2, p: int) -> Fp2:
    return (-x[0] % p, -x[1] % p)


def fp2_conj(x: Fp2, p: int) -> Fp2:
    return (x[0], -x[1] % p)


def fp2_mul(x: Fp2, y: Fp2, p: int) -> Fp2:
    u1, v1 = x
    u2, v2 = y
    return ((u1 * u2 - v1 * v2) % p, (u1 * v2 + u2 * v1) % p)


def fp2_sqr(x: Fp2, p: int) -> Fp2:
    u, v = x
    return ((u + v) * (u - v) % p, 2 * u * v % p)


def fp2_scale(x: Fp2, c: int, p: int) -> Fp2:
    return (x[0] * c % p, x[1] * c % p)


def fp2_inv(x: Fp2, p: int) -> Fp2:
    u, v = x
    norm = (u * u + v * v) % p
    if norm == 0:
        raise ZeroDivisionError("inverse of zero in F_p^2")
    t = pow(norm, -1, p)
    return (u * t % p, -v * t % p)


def fp2_pow(x: Fp2, e: int, p: int) -> Fp2:
    if e < 0:
        return fp2_pow(fp2_inv(x, p), -e, p)
    result = FP2_ONE
    for bit in bin(e)[2:]:
        result = fp2_sqr(result, p)
        if bit == "1":
            result = fp2_mul(result, x, p)
    return result
