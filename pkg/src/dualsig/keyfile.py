"""Line-oriented ``name = hexvalue`` files for params, primes, keys and signatures.

Every file starts with ``ver = 1``. Field sets are exact: an unknown or
missing field is a :class:`FormatError`. Loaders re-validate the mathematical
invariants and raise :class:`ValidationError` when they fail.
"""

from __future__ import annotations

import math

from . import numeric as nm
from .curve import CurveParams, is_on_curve, scalar_mul
from .pairing import e_n
from .scheme import PrivateKey, PublicKey, SchemeParams, Signature

VERSION = "1"

PARAMS_FIELDS = ("p", "A", "n", "Px", "Py")
PRIMES_FIELDS = ("p1", "p2")
PUBLIC_FIELDS = ("p", "A", "n", "g", "Px", "Py", "Qx", "Qy", "Rx", "Ry", "r")
PRIVATE_FIELDS = ("p1", "p2", "a", "b")
SIGNATURE_FIELDS = ("Sx", "s")


class FormatError(ValueError):
    pass


class ValidationError(ValueError):
    pass


def dumps(fields: dict) -> str:
    lines = [f"ver = {VERSION}"]
    for name, value in fields.items():
        lines.append(f"{name} = {value}")
    return "\n".join(lines) + "\n"


def loads(text: str, expected: tuple) -> dict:
    """Parse a file body into raw string values, enforcing the exact field set."""
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        name, sep, value = line.partition("=")
        if not sep:
            raise FormatError(f"line {lineno}: expected 'name = value'")
        name, value = name.strip(), value.strip()
        if name in values:
            raise FormatError(f"line {lineno}: duplicate field {name!r}")
        values[name] = value
    if values.pop("ver", None) != VERSION:
        raise FormatError("missing or unsupported 'ver'")
    unknown = set(values) - set(expected)
    if unknown:
        raise FormatError(f"unknown fields: {', '.join(sorted(unknown))}")
    missing = [f for f in expected if f not in values]
    if missing:
        raise FormatError(f"missing fields: {', '.join(missing)}")
    return values


def _nat(values: dict, name: str) -> int:
    try:
        return nm.from_hex(values[name])
    except ValueError as exc:
        raise FormatError(f"field {name!r}: {exc}") from None


def _point(values: dict, xname: str, yname: str):
    if values[xname] == "inf" and values[yname] == "inf":
        return None
    return (_nat(values, xname), _nat(values, yname))


def _point_fields(P, xname: str, yname: str) -> dict:
    if P is None:
        return {xname: "inf", yname: "inf"}
    return {xname: nm.to_hex(P[0]), yname: nm.to_hex(P[1])}


# -- params ----------------------------------------------------------------

def dump_params(params: SchemeParams) -> str:
    fields = {"p": nm.to_hex(params.p), "A": nm.to_hex(params.curve.A), "n": nm.to_hex(params.n)}
    fields.update(_point_fields(params.P, "Px", "Py"))
    return dumps(fields)


def _params_from(values: dict) -> SchemeParams:
    p, A, n = _nat(values, "p"), _nat(values, "A"), _nat(values, "n")
    P = _point(values, "Px", "Py")
    return validate_params(p, A, n, P)


def validate_params(p: int, A: int, n: int, P) -> SchemeParams:
    if p + 1 != 4 * n:
        raise ValidationError("p + 1 != 4n")
    curve = CurveParams(p, A)
    try:
        curve.validate()
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    if P is None or not is_on_curve(P, curve):
        raise ValidationError("base point is not on the curve")
    if scalar_mul(n, P, curve) is not None:
        raise ValidationError("base point order does not divide n")
    params = SchemeParams(curve, n, P)
    if e_n(P, P, params.pairing) == nm.FP2_ONE:
        raise ValidationError("self-pairing of the base point is degenerate")
    return params


def load_params(text: str) -> SchemeParams:
    return _params_from(loads(text, PARAMS_FIELDS))


def dump_primes(p1: int, p2: int) -> str:
    return dumps({"p1": nm.to_hex(p1), "p2": nm.to_hex(p2)})


def load_primes(text: str, params: SchemeParams | None = None) -> tuple[int, int]:
    values = loads(text, PRIMES_FIELDS)
    p1, p2 = _nat(values, "p1"), _nat(values, "p2")
    if not (nm.is_prime(p1) and nm.is_prime(p2)) or p1 == p2:
        raise ValidationError("p1 and p2 must be distinct primes")
    if params is not None:
        check_primes(params, p1, p2)
    return p1, p2


def check_primes(params: SchemeParams, p1: int, p2: int) -> None:
    if p1 * p2 != params.n:
        raise ValidationError("p1 * p2 != n")
    for q in (p1, p2):
        if scalar_mul(params.n // q, params.P, params.curve) is None:
            raise ValidationError("base point does not have exact order n")


# -- keys ------------------------------------------------------------------

def dump_public(pub: PublicKey) -> str:
    params = pub.params
    fields = {
        "p": nm.to_hex(params.p),
        "A": nm.to_hex(params.curve.A),
        "n": nm.to_hex(params.n),
        "g": nm.to_hex(pub.g),
    }
    fields.update(_point_fields(params.P, "Px", "Py"))
    fields.update(_point_fields(pub.Q, "Qx", "Qy"))
    fields.update(_point_fields(pub.R, "Rx", "Ry"))
    fields["r"] = nm.to_hex(pub.r)
    return dumps(fields)


def load_public(text: str) -> PublicKey:
    values = loads(text, PUBLIC_FIELDS)
    params = _params_from(values)
    n, curve = params.n, params.curve
    g, r = _nat(values, "g"), _nat(values, "r")
    Q, R = _point(values, "Qx", "Qy"), _point(values, "Rx", "Ry")
    if not 1 < g < n - 1 or math.gcd(g, n) != 1:
        raise ValidationError("g must be a unit in [2, n-2]")
    if not 0 < r < n:
        raise ValidationError("r out of range")
    for name, X in (("Q", Q), ("R", R)):
        if X is None or not is_on_curve(X, curve) or scalar_mul(n, X, curve) is not None:
            raise ValidationError(f"{name} is not a point of the order-n subgroup")
    return PublicKey(params, g, Q, R, r)


def dump_private(priv: PrivateKey) -> str:
    return dumps({
        "p1": nm.to_hex(priv.p1),
        "p2": nm.to_hex(priv.p2),
        "a": nm.to_hex(priv.a),
        "b": nm.to_hex(priv.b),
    })


def load_private(text: str) -> PrivateKey:
    values = loads(text, PRIVATE_FIELDS)
    priv = PrivateKey(_nat(values, "a"), _nat(values, "b"), _nat(values, "p1"), _nat(values, "p2"))
    if not (nm.is_prime(priv.p1) and nm.is_prime(priv.p2)) or priv.p1 == priv.p2:
        raise ValidationError("p1 and p2 must be distinct primes")
    if not (1 <= priv.a < priv.phi and 1 <= priv.b < priv.phi):
        raise ValidationError("a and b must lie in [1, phi(n) - 1]")
    return priv


def check_key_pair(pub: PublicKey, priv: PrivateKey) -> None:
    """Raise ValidationError unless the private key really belongs to ``pub``."""
    if priv.n != pub.n:
        raise ValidationError("private key modulus does not match public key")
    n, phi, P, curve = pub.n, priv.phi, pub.P, pub.params.curve
    if pow(pub.g, priv.b, n) != pub.r:
        raise ValidationError("r != g^b mod n")
    if scalar_mul(pow(pub.g, priv.a, n), P, curve) != pub.Q:
        raise ValidationError("Q != g^a P")
    if scalar_mul(pow(pub.g, (priv.a - priv.a * priv.b) % phi, n), P, curve) != pub.R:
        raise ValidationError("R != g^(a-ab) P")


# -- signatures --------------------------------------------------------------

def dump_signature(sig: Signature) -> str:
    return dumps({"Sx": nm.to_hex(sig.Sx), "s": nm.to_hex(sig.s)})


def load_signature(text: str) -> Signature:
    values = loads(text, SIGNATURE_FIELDS)
    return Signature(_nat(values, "Sx"), _nat(values, "s"))
