"""Affine arithmetic on y^2 = x^3 + A*x over F_p and over F_p^2.

A point is ``None`` (the point at infinity) or a pair ``(x, y)``. Coordinates
are ints for points over F_p and ``(u, v)`` tuples for points over F_p^2; the
same group law serves both.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Union

from . import numeric as nm
from . import opcount

Coord = Union[int, nm.Fp2]
Point = Optional[tuple]

INFINITY: Point = None


class NotOnCurveError(ValueError):
    pass


@dataclass(frozen=True)
class CurveParams:
    p: int
    A: int = 1

    def validate(self) -> None:
        if self.p % 4 != 3 or not nm.is_prime(self.p):
            raise ValueError("curve field must be a prime p = 3 (mod 4)")
        if nm.legendre(-self.A % self.p, self.p) != -1:
            raise ValueError("-A must be a non-residue modulo p")


class _PrimeField:
    def __init__(self, p):
        self.p = p
        self.zero = 0

    def lift(self, c):
        return c % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        return pow(a, -1, self.p)


class _QuadField:
    def __init__(self, p):
        self.p = p
        self.zero = nm.FP2_ZERO

    def lift(self, c):
        return (c % self.p, 0)

    def add(self, a, b):
        return nm.fp2_add(a, b, self.p)

    def sub(self, a, b):
        return nm.fp2_sub(a, b, self.p)

    def neg(self, a):
        return nm.fp2_neg(a, self.p)

    def mul(self, a, b):
        return nm.fp2_mul(a, b, self.p)

    def inv(self, a):
        return nm.fp2_inv(a, self.p)


def _field_of(P: tuple, p: int):
    if isinstance(P[0], tuple):
        return _QuadField(p)
    return _PrimeField(p)


def is_on_curve(P: Point, curve: CurveParams) -> bool:
    if P is None:
        return True
    F = _field_of(P, curve.p)
    x, y = P
    rhs = F.add(F.mul(F.mul(x, x), x), F.mul(F.lift(curve.A), x))
    return F.mul(y, y) == rhs


def negate(P: Point, curve: CurveParams) -> Point:
    if P is None:
        return None
    F = _field_of(P, curve.p)
    return (P[0], F.neg(P[1]))


def add(P: Point, Q: Point, curve: CurveParams) -> Point:
    if P is None:
        return Q
    if Q is None:
        return P
    F = _field_of(P, curve.p)
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if F.add(y1, y2) == F.zero:
            return None
        # doubling; y1 != 0 here since y1 == -y2 was excluded
        three_x2 = F.mul(F.lift(3), F.mul(x1, x1))
        lam = F.mul(F.add(three_x2, F.lift(curve.A)), F.inv(F.add(y1, y1)))
    else:
        lam = F.mul(F.sub(y2, y1), F.inv(F.sub(x2, x1)))
    x3 = F.sub(F.sub(F.mul(lam, lam), x1), x2)
    y3 = F.sub(F.mul(lam, F.sub(x1, x3)), y1)
    return (x3, y3)


def double(P: Point, curve: CurveParams) -> Point:
    return add(P, P, curve)


def scalar_mul(k: int, P: Point, curve: CurveParams, op: str = "point_mul") -> Point:
    """k*P by left-to-right double-and-add.

    ``op`` names the counter this multiplication is booked under (see
    :mod:`dualsig.opcount`); hashing books its multiplication separately.
    """
    if k < 0:
        raise ValueError("scalar must be non-negative")
    opcount.record(op)
    R = None
    if P is None or k == 0:
        return R
    for bit in bin(k)[2:]:
        R = add(R, R, curve)
        if bit == "1":
            R = add(R, P, curve)
    return R


def decompress(x: int, curve: CurveParams) -> Point:
    """Recover a point from its x-coordinate, taking the smaller square root as y."""
    p = curve.p
    if not 0 <= x < p:
        raise NotOnCurveError("x-coordinate out of range")
    rhs = (x * x * x + curve.A * x) % p
    try:
        y = nm.sqrt_mod(rhs, p)
    except nm.NoSquareRootError:
        raise NotOnCurveError(f"no point with x = {x}") from None
    return (x, y)


def random_point(curve: CurveParams, rng: random.Random) -> Point:
    p = curve.p
    while True:
        x = rng.randrange(p)
        rhs = (x * x * x + curve.A * x) % p
        if nm.legendre(rhs, p) == -1:
            continue
        y = nm.sqrt_mod(rhs, p)
        if rng.getrandbits(1):
            y = -y % p
        return (x, y)
