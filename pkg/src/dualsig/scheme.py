"""Parameter generation, key generation, signing and verification.

All exponent arithmetic on g happens modulo phi(n) (signer side) or is folded
into a single modular power (verifier side); group elements of order n are
points of E(F_p) for p = 4n - 1.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional

from . import numeric as nm
from .curve import CurveParams, NotOnCurveError, Point, decompress, random_point, scalar_mul
from .hashing import hash_scalar, map_to_point
from .pairing import DegenerateEvaluationError, PairingContext, e_n, is_primitive_root

MAX_PRIME_DRAWS = 100_000
MAX_P2_RESTARTS = 10_000
MAX_BASE_POINT_DRAWS = 1000


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class SchemeParams:
    curve: CurveParams
    n: int
    P: Point
    pairing: PairingContext = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "pairing", PairingContext(self.curve, self.n))

    @property
    def p(self) -> int:
        return self.curve.p


@dataclass(frozen=True)
class PublicKey:
    params: SchemeParams
    g: int
    Q: Point
    R: Point
    r: int

    @property
    def P(self) -> Point:
        return self.params.P

    @property
    def n(self) -> int:
        return self.params.n


@dataclass(frozen=True)
class PrivateKey:
    a: int
    b: int
    p1: int
    p2: int

    @property
    def phi(self) -> int:
        return (self.p1 - 1) * (self.p2 - 1)

    @property
    def n(self) -> int:
        return self.p1 * self.p2


@dataclass(frozen=True)
class Signature:
    Sx: int
    s: int


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.accepted


ACCEPT = Verdict(True)


def _random_prime(bits: int, rng: random.Random) -> int:
    for _ in range(MAX_PRIME_DRAWS):
        k = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if nm.is_prime(k):
            return k
    raise GenerationError(f"no {bits}-bit prime found")


def _companion_prime(p1: int, bits: int, rng: random.Random) -> int:
    """Walk p2 = NextPrime(p2) from a random start until 4*p1*p2 - 1 is prime."""
    for _ in range(MAX_P2_RESTARTS):
        p2 = nm.next_prime(rng.getrandbits(bits) | (1 << (bits - 1)))
        while p2.bit_length() <= bits + 1:
            if p2 != p1 and nm.is_prime(4 * p1 * p2 - 1):
                return p2
            p2 = nm.next_prime(p2 + 1)
    raise GenerationError("prime walk for p2 did not terminate")


def base_point_ok(P: Point, curve: CurveParams, n: int, p1: int, p2: int) -> bool:
    if P is None:
        return False
    if scalar_mul(n, P, curve) is not None:
        return False
    return scalar_mul(p2, P, curve) is not None and scalar_mul(p1, P, curve) is not None


def gen_params(bits: int, rng: random.Random) -> tuple[SchemeParams, int, int]:
    """Random parameters with l-bit p1 and p2 (p2 may grow to l+1 bits), p = 4*p1*p2 - 1."""
    if bits < 3:
        raise ValueError("bit size must be at least 3")
    p1 = _random_prime(bits, rng)
    p2 = _companion_prime(p1, bits, rng)
    n = p1 * p2
    curve = CurveParams(4 * n - 1, 1)
    curve.validate()
    ctx = PairingContext(curve, n)
    for _ in range(MAX_BASE_POINT_DRAWS):
        P = scalar_mul(4, random_point(curve, rng), curve)
        if not base_point_ok(P, curve, n, p1, p2):
            continue
        if is_primitive_root(e_n(P, P, ctx), n, (p1, p2), curve.p):
            return SchemeParams(curve, n, P), p1, p2
    raise GenerationError("no base point with a primitive self-pairing")


def derive_keys(params: SchemeParams, p1: int, p2: int, g: int, a: int, b: int) -> tuple[PublicKey, PrivateKey]:
    """Key pair for explicitly chosen secrets g, a, b."""
    n = params.n
    if p1 * p2 != n:
        raise ValueError("p1 * p2 does not match n")
    priv = PrivateKey(a, b, p1, p2)
    phi = priv.phi
    r = pow(g, b, n)
    Q = scalar_mul(pow(g, a % phi, n), params.P, params.curve)
    R = scalar_mul(pow(g, (a - a * b) % phi, n), params.P, params.curve)
    return PublicKey(params, g, Q, R, r), priv


def keygen(params: SchemeParams, p1: int, p2: int, rng: random.Random) -> tuple[PublicKey, PrivateKey]:
    n = params.n
    phi = (p1 - 1) * (p2 - 1)
    while True:
        g = rng.randrange(2, n - 1)
        if math.gcd(g, n) == 1:
            break
    a = rng.randrange(1, phi)
    b = rng.randrange(1, phi)
    return derive_keys(params, p1, p2, g, a, b)


def sign(priv: PrivateKey, pub: PublicKey, message: bytes) -> Signature:
    """Deterministic signature (x(S), s) with S = g^(ab) H(m), s = b h(m) + a - ab mod phi(n)."""
    params = pub.params
    n, phi = params.n, priv.phi
    a, b = priv.a % phi, priv.b % phi
    ab = a * b % phi
    # message independent; a long-lived signer would cache these
    g_ab = pow(pub.g, ab, n)
    a_minus_ab = (a - ab) % phi

    h = hash_scalar(message, n)
    H = map_to_point(message, params.P, n, params.curve)
    S = scalar_mul(g_ab, H, params.curve)
    s = (b * h + a_minus_ab) % phi
    return Signature(S[0], s)


def verify(pub: PublicKey, message: bytes, sig: Signature) -> Verdict:
    """Accept iff e(g^s Sigma, P) = e(r^h(m) H(m), Q)^(+-1) and g^s P = r^h(m) R."""
    params = pub.params
    curve, n, ctx = params.curve, params.n, params.pairing
    if sig.s < 0:
        return Verdict(False, "bad-scalar")
    try:
        sigma = decompress(sig.Sx, curve)
    except NotOnCurveError:
        return Verdict(False, "not-on-curve")

    h = hash_scalar(message, n)
    H = map_to_point(message, params.P, n, curve)
    w = pow(pub.g, sig.s, n)
    z = pow(pub.r, h, n)

    try:
        T = e_n(scalar_mul(w, sigma, curve), params.P, ctx)
        U = e_n(scalar_mul(z, H, curve), pub.Q, ctx)
    except DegenerateEvaluationError:
        return Verdict(False, "pairing-mismatch")
    if U != T and U != nm.fp2_inv(T, curve.p):
        return Verdict(False, "pairing-mismatch")

    if scalar_mul(w, params.P, curve) != scalar_mul(z, pub.R, curve):
        return Verdict(False, "base-equation-mismatch")
    return ACCEPT
