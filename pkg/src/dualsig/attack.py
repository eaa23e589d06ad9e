"""Desk-scale factoring of n from a signing oracle.

The attacker builds a public key on the target modulus from its own g, a, b
(it never needs phi(n) to do so) and asks the oracle, which does know the
factorization, for signatures. Each residual b*h(m) + a - ab - s is a multiple
of phi(n); their gcd is phi(n) up to a small cofactor, and phi(n) factors n.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import numeric as nm
from .curve import scalar_mul
from .hashing import hash_scalar
from .scheme import PrivateKey, PublicKey, SchemeParams, Signature, gen_params, sign

MAX_BITS = 32
STRIP_PRIMES = tuple(q for q in range(2, 101) if nm.is_prime(q))
MAX_STRIP_CANDIDATES = 20_000


class InconclusiveError(ValueError):
    pass


class InvalidPhiError(ValueError):
    pass


@dataclass
class OracleTranscript:
    messages: list
    signatures: list
    a: int
    b: int
    g: int
    n: int

    def __post_init__(self):
        if len(self.messages) != len(self.signatures):
            raise ValueError("messages and signatures differ in length")


def residuals(t: OracleTranscript) -> list[int]:
    ab = t.a * t.b
    return [t.b * hash_scalar(m, t.n) + t.a - ab - sig.s for m, sig in zip(t.messages, t.signatures)]


def phi_from_signatures(t: OracleTranscript) -> int:
    """gcd of the absolute residuals; always a multiple of phi(n)."""
    if not t.signatures:
        raise InconclusiveError("empty transcript")
    d = 0
    for res in residuals(t):
        d = math.gcd(d, abs(res))
    if d == 0:
        raise InconclusiveError("all residuals are zero; more signatures needed")
    return d


def gcd_trajectory(t: OracleTranscript) -> list[int]:
    out, d = [], 0
    for res in residuals(t):
        d = math.gcd(d, abs(res))
        out.append(d)
    return out


def factor_from_phi(n: int, phi: int) -> tuple[int, int]:
    """Recover p1 < p2 from n = p1*p2 and phi = (p1 - 1)(p2 - 1)."""
    sigma = n - phi + 1
    disc = sigma * sigma - 4 * n
    if sigma <= 0 or disc <= 0:
        raise InvalidPhiError("phi is inconsistent with n")
    root = math.isqrt(disc)
    if root * root != disc or (sigma - root) % 2:
        raise InvalidPhiError("discriminant is not a perfect square")
    p1, p2 = (sigma - root) // 2, (sigma + root) // 2
    if p1 * p2 != n or not (nm.is_prime(p1) and nm.is_prime(p2)):
        raise InvalidPhiError("roots are not the prime factors of n")
    return p1, p2


def _smooth_divisors(d: int):
    """Divisors of d built from primes <= 100, in increasing order."""
    exps = []
    for q in STRIP_PRIMES:
        e, rest = 0, d
        while rest % q == 0:
            rest //= q
            e += 1
        if e:
            exps.append((q, e))
    divisors = [1]
    for q, e in exps:
        divisors = [m * q**j for m in divisors for j in range(e + 1)]
    return sorted(divisors)


def strip_small_factors(n: int, d: int) -> tuple[int, int, int, int]:
    """Find phi(n) among d / m for 100-smooth m; returns (p1, p2, phi, candidates tried)."""
    tried = 0
    for m in _smooth_divisors(d)[:MAX_STRIP_CANDIDATES]:
        tried += 1
        try:
            p1, p2 = factor_from_phi(n, d // m)
        except InvalidPhiError:
            continue
        return p1, p2, d // m, tried
    raise InvalidPhiError(f"no phi candidate among {tried} small-factor quotients")


@dataclass
class ReductionReport:
    bits: int
    n: int
    signatures: int
    success: bool = False
    factors: Optional[tuple] = None
    phi: Optional[int] = None
    gcd: Optional[int] = None
    gcd_trajectory: list = field(default_factory=list)
    candidates_tried: int = 0
    error: Optional[str] = None

    def lines(self) -> list[str]:
        out = [
            f"bits = {self.bits}",
            f"n = {self.n}",
            f"signatures = {self.signatures}",
            f"success = {str(self.success).lower()}",
        ]
        if self.factors:
            out.append(f"p1 = {self.factors[0]}")
            out.append(f"p2 = {self.factors[1]}")
        if self.phi is not None:
            out.append(f"phi = {self.phi}")
        if self.gcd is not None:
            out.append(f"gcd = {self.gcd}")
        out.append("gcd_trajectory = " + ",".join(str(d) for d in self.gcd_trajectory))
        out.append(f"candidates_tried = {self.candidates_tried}")
        if self.error:
            out.append(f"error = {self.error}")
        return out

    def text(self) -> str:
        head = f"{self.bits}-bit factors, n = {self.n}, {self.signatures} signature(s): "
        if self.success:
            p1, p2 = self.factors
            return head + f"factored as {p1} * {p2} (phi = {self.phi}, {self.candidates_tried} phi candidate(s) tried)"
        return head + f"failed ({self.error})"


def attack_transcript(params: SchemeParams, oracle: Callable, messages: list, rng: random.Random):
    """Build a key on ``params`` from fresh g, a, b in [1, n-1], and collect oracle signatures."""
    n, P, curve = params.n, params.P, params.curve
    while True:
        g = rng.randrange(2, n - 1)
        if math.gcd(g, n) == 1:
            break
    a = rng.randrange(1, n)
    b = rng.randrange(1, n)
    # g^(a - ab) mod n via a modular inverse; phi(n) is not needed
    pub = PublicKey(params, g, scalar_mul(pow(g, a, n), P, curve), scalar_mul(pow(g, a - a * b, n), P, curve), pow(g, b, n))
    sigs = [oracle(pub, a, b, m) for m in messages]
    return pub, OracleTranscript(list(messages), sigs, a, b, g, n)


def run_reduction(bits: int, k: int, rng: random.Random) -> ReductionReport:
    """Generate a challenge modulus, query a signing oracle k times, and try to factor it."""
    if bits > MAX_BITS:
        raise ValueError(f"reduction demo is capped at {MAX_BITS}-bit factors")
    params, p1, p2 = gen_params(bits, rng)

    # The oracle alone holds the factorization.
    def oracle(pub: PublicKey, a: int, b: int, m: bytes) -> Signature:
        return sign(PrivateKey(a, b, p1, p2), pub, m)

    messages = [rng.randbytes(16) for _ in range(k)]
    _, transcript = attack_transcript(params, oracle, messages, rng)
    report = ReductionReport(bits, params.n, k)
    report.gcd_trajectory = gcd_trajectory(transcript)
    try:
        d = phi_from_signatures(transcript)
        report.gcd = d
        q1, q2, phi, tried = strip_small_factors(params.n, d)
    except (InconclusiveError, InvalidPhiError) as exc:
        report.error = str(exc)
        return report
    report.success = True
    report.factors = (q1, q2)
    report.phi = phi
    report.candidates_tried = tried
    return report
