"""Signatures whose forgery needs both factoring n and elliptic-curve discrete logs.

Typical use::

    rng = random.Random(b"seed")
    params, p1, p2 = gen_params(32, rng)
    pub, priv = keygen(params, p1, p2, rng)
    sig = sign(priv, pub, b"message")
    assert verify(pub, b"message", sig)
"""

from .scheme import (
    PrivateKey,
    PublicKey,
    SchemeParams,
    Signature,
    Verdict,
    derive_keys,
    gen_params,
    keygen,
    sign,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "PrivateKey",
    "PublicKey",
    "SchemeParams",
    "Signature",
    "Verdict",
    "derive_keys",
    "gen_params",
    "keygen",
    "sign",
    "verify",
]
