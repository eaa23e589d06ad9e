"""Reduced Tate pairing on y^2 = x^3 + A*x with the distortion map (x, y) -> (-x, i*y).

The curves used here have p = 3 (mod 4) and n | p + 1, so the embedding degree
is 2 and pairing values live in F_p^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import numeric as nm
from . import opcount
from .curve import CurveParams, Point, add


class DegenerateEvaluationError(ArithmeticError):
    """A Miller-loop line or vertical vanished at the evaluation point."""


def final_exponent(p: int, n: int) -> int:
    return (p * p - 1) // n


@dataclass(frozen=True)
class PairingContext:
    curve: CurveParams
    n: int
    final_exp: int = field(init=False)

    def __post_init__(self):
        p = self.curve.p
        if self.n < 2 or (p + 1) % self.n:
            raise ValueError("pairing order n must divide p + 1")
        object.__setattr__(self, "final_exp", final_exponent(p, self.n))


def distortion(P: Point, curve: CurveParams) -> Point:
    if P is None:
        return None
    x, y = P
    p = curve.p
    return ((-x % p, 0), (0, y % p))


def _lift(Q: Point, p: int) -> Point:
    if Q is None or isinstance(Q[0], tuple):
        return Q
    return ((Q[0] % p, 0), (Q[1] % p, 0))


def _line(T1, T2, Q, curve):
    """Value at Q of the line through T1, T2 (tangent if equal), and whether it is vertical."""
    p = curve.p
    x1, y1 = T1
    x2, y2 = T2
    xq, yq = Q
    if x1 == x2 and (y1 + y2) % p == 0:
        return (xq[0] - x1) % p, xq[1], True
    if x1 == x2:
        lam = (3 * x1 * x1 + curve.A) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    # (yq - y1) - lam * (xq - x1)
    u = (yq[0] - y1 - lam * (xq[0] - x1)) % p
    v = (yq[1] - lam * xq[1]) % p
    return u, v, False


def _step(f, T1, T2, Q, curve, with_denominators):
    p = curve.p
    if T1 is None or T2 is None:
        return f, add(T1, T2, curve)
    u, v, vertical = _line(T1, T2, Q, curve)
    S = add(T1, T2, curve)
    if vertical and not with_denominators:
        return f, S
    if u == 0 and v == 0:
        raise DegenerateEvaluationError("line vanishes at the evaluation point")
    f = nm.fp2_mul(f, (u, v), p)
    if with_denominators and S is not None:
        xq = Q[0]
        den = ((xq[0] - S[0]) % p, xq[1])
        if den == nm.FP2_ZERO:
            raise DegenerateEvaluationError("vertical line vanishes at the evaluation point")
        f = nm.fp2_mul(f, nm.fp2_inv(den, p), p)
    return f, S


def miller_loop(P: Point, Q: Point, ctx: PairingContext, with_denominators: bool = False) -> nm.Fp2:
    """Evaluate the Miller function f_{n,P} at Q, bits of n taken most significant first.

    Without denominators, vertical lines are skipped entirely; that is only
    sound when x(Q) lies in F_p, where every vertical evaluates into F_p and the
    final exponentiation erases it.
    """
    curve = ctx.curve
    Q = _lift(Q, curve.p)
    f = nm.FP2_ONE
    T = P
    for bit in bin(ctx.n)[3:]:
        f = nm.fp2_sqr(f, curve.p)
        f, T = _step(f, T, T, Q, curve, with_denominators)
        if bit == "1":
            f, T = _step(f, T, P, Q, curve, with_denominators)
    return f


def tate_reduced(P: Point, Q: Point, ctx: PairingContext) -> nm.Fp2:
    """Reduced Tate pairing f_{n,P}(Q)^((p^2 - 1)/n), an n-th root of unity in F_p^2."""
    opcount.record("pairing")
    if P is None or Q is None:
        return nm.FP2_ONE
    Q = _lift(Q, ctx.curve.p)
    with_denominators = Q[0][1] != 0
    f = miller_loop(P, Q, ctx, with_denominators)
    return nm.fp2_pow(f, ctx.final_exp, ctx.curve.p)


def e_n(X: Point, Y: Point, ctx: PairingContext) -> nm.Fp2:
    """Modified pairing e_n(X, Y) = tate(X, distortion(Y)); non-degenerate on the order-n subgroup."""
    return tate_reduced(X, distortion(Y, ctx.curve), ctx)


def fp2_order_divides(z: nm.Fp2, m: int, p: int) -> bool:
    return nm.fp2_pow(z, m, p) == nm.FP2_ONE


def is_primitive_root(z: nm.Fp2, n: int, prime_factors, p: int) -> bool:
    """True iff z has multiplicative order exactly n, given the distinct primes dividing n."""
    if not fp2_order_divides(z, n, p):
        return False
    return all(not fp2_order_divides(z, n // q, p) for q in prime_factors)

