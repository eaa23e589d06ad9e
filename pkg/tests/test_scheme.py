import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualsig import numeric as nm
from dualsig.curve import CurveParams, scalar_mul
from dualsig.hashing import hash_scalar, map_to_point
from dualsig.pairing import e_n, is_primitive_root
from dualsig.scheme import (
    SchemeParams,
    Signature,
    derive_keys,
    gen_params,
    keygen,
    sign,
    verify,
)
from dualsig.vectors import EXAMPLE

EX_PARAMS = SchemeParams(CurveParams(EXAMPLE.q, 1), EXAMPLE.n, (EXAMPLE.Px, EXAMPLE.Py))


def multiplicative_order(g, n):
    k, x = 1, g % n
    while x != 1:
        x = x * g % n
        k += 1
    return k


def test_gen_params_toy_seed():
    params, p1, p2 = gen_params(3, random.Random(1))
    assert (p1, p2, params.p, params.n) == (5, 7, 139, 35)
    assert scalar_mul(35, params.P, params.curve) is None
    assert scalar_mul(5, params.P, params.curve) and scalar_mul(7, params.P, params.curve)


@pytest.mark.parametrize("bits", [3, 4, 8, 12, 16, 24])
def test_gen_params_invariants(bits):
    for seed in range(3):
        params, p1, p2 = gen_params(bits, random.Random(seed))
        p, n = params.p, params.n
        assert p % 4 == 3 and p + 1 == 4 * n and nm.is_prime(p)
        assert n == p1 * p2 and p1 != p2
        assert p1.bit_length() == bits and bits <= p2.bit_length() <= bits + 1
        assert is_primitive_root(e_n(params.P, params.P, params.pairing), n, (p1, p2), p)


def test_gen_params_rejects_tiny_bits():
    with pytest.raises(ValueError):
        gen_params(2, random.Random(0))


def test_published_parameters():
    assert 4 * EXAMPLE.p1 * EXAMPLE.p2 - 1 == EXAMPLE.q
    c = EX_PARAMS.curve
    assert scalar_mul(EXAMPLE.n, EX_PARAMS.P, c) is None
    assert scalar_mul(EXAMPLE.p1, EX_PARAMS.P, c) is not None
    assert scalar_mul(EXAMPLE.p2, EX_PARAMS.P, c) is not None


def test_published_keys():
    pub, priv = derive_keys(EX_PARAMS, EXAMPLE.p1, EXAMPLE.p2, EXAMPLE.g, EXAMPLE.a, EXAMPLE.b)
    assert pub.r == EXAMPLE.r
    assert pub.Q == (EXAMPLE.Qx, EXAMPLE.Qy)
    assert pub.R == (EXAMPLE.Rx, EXAMPLE.Ry)
    # g^(a-ab) mod n recomputed by CRT, independent of the mod-phi reduction used in keygen
    e = EXAMPLE.a - EXAMPLE.a * EXAMPLE.b
    c1 = pow(2, e % (EXAMPLE.p1 - 1), EXAMPLE.p1)
    c2 = pow(2, e % (EXAMPLE.p2 - 1), EXAMPLE.p2)
    crt = (c1 + EXAMPLE.p1 * ((c2 - c1) * pow(EXAMPLE.p1, -1, EXAMPLE.p2) % EXAMPLE.p2)) % EXAMPLE.n
    assert crt == EXAMPLE.g_pow_a_1_minus_b
    assert pub.R == scalar_mul(crt, EX_PARAMS.P, EX_PARAMS.curve)


def test_published_key_known_answer_signature():
    pub, priv = derive_keys(EX_PARAMS, EXAMPLE.p1, EXAMPLE.p2, EXAMPLE.g, EXAMPLE.a, EXAMPLE.b)
    sig = sign(priv, pub, b"abc")
    assert sig == Signature(
        0xAE61533262AF92422CB6807E7597DBBC21A3BE7DACC09D1759C387E5FAE83FF557FC300F1CF0F17FF63287EEADE1A76C31F5F962264BB1CEC8ACC040E2577367,
        0x19BCABEC89B3950BFF2F0D0373498DC246979DAE1DEB814ACADF841CC7998100C6A95FFCBE04B5AB1346F54B143B59E6E12D69791ED6F47DB46EC967C323D222,
    )
    assert verify(pub, b"abc", sig)
    assert not verify(pub, b"abd", sig)


def test_keygen_invariants(toy_params):
    for seed in range(50):
        pub, priv = keygen(toy_params, 5, 7, random.Random(seed))
        n, phi = 35, 24
        assert 1 < pub.g < n - 1 and nm.gcd(pub.g, n) == 1
        assert 1 <= priv.a < phi and 1 <= priv.b < phi and priv.phi == phi
        assert pub.r == pow(pub.g, priv.b, n)
        assert pub.Q == scalar_mul(pow(pub.g, priv.a, n), toy_params.P, toy_params.curve)
        assert 0 < pub.r < n


def test_toy_key_regression(toy_keys):
    pub, priv = toy_keys
    assert (pub.g, pub.Q, pub.R, pub.r) == (8, (113, 32), (64, 101), 22)
    assert (priv.a, priv.b) == (7, 7)
    assert sign(priv, pub, b"abc") == Signature(67, 10)


def test_sign_is_deterministic_and_bounded(toy_keys):
    pub, priv = toy_keys
    for i in range(100):
        m = f"message {i}".encode()
        sig = sign(priv, pub, m)
        assert sig == sign(priv, pub, m)
        assert 0 <= sig.s < priv.phi and 0 <= sig.Sx < pub.params.p
        assert verify(pub, m, sig)


def test_tampering_rejected_toy(toy_keys):
    pub, priv = toy_keys
    order = multiplicative_order(pub.g, 35)
    rng = random.Random(5)
    for _ in range(100):
        m = rng.randbytes(8)
        sig = sign(priv, pub, m)
        # s+1 differs from s modulo ord(g) since g != 1
        assert not verify(pub, m, Signature(sig.Sx, sig.s + 1))
        # with only 34 points and 24 exponents, another message's signature may coincide
        other = rng.randbytes(8)
        theirs = sign(priv, pub, other)
        coincide = theirs.Sx == sig.Sx and theirs.s % order == sig.s % order
        assert bool(verify(pub, other, sig)) == coincide


def test_tampering_rejected_32bit(keys32):
    pub, priv = keys32
    rng = random.Random(6)
    for _ in range(100):
        m = rng.randbytes(12)
        sig = sign(priv, pub, m)
        assert not verify(pub, m, Signature(sig.Sx, sig.s + 1))
        assert not verify(pub, m + b"!", sig)


def test_verify_reasons(toy_keys):
    pub, priv = toy_keys
    m = b"reasons"
    sig = sign(priv, pub, m)
    assert verify(pub, m, Signature(2, sig.s)).reason == "not-on-curve"
    assert verify(pub, m, Signature(139, sig.s)).reason == "not-on-curve"
    assert verify(pub, m, Signature(sig.Sx, -1)).reason == "bad-scalar"
    assert verify(pub, m, Signature(sig.Sx, sig.s + 1)).reason in ("pairing-mismatch", "base-equation-mismatch")


@settings(max_examples=25, deadline=None)
@given(st.binary(max_size=64))
def test_roundtrip_32bit(keys32, m):
    pub, priv = keys32
    assert verify(pub, m, sign(priv, pub, m))


def _sweep(pub, m):
    curve, P = pub.params.curve, pub.P
    accepted = set()
    for u in range(1, 35):
        S = scalar_mul(u, P, curve)
        for s in range(24):
            if verify(pub, m, Signature(S[0], s)):
                accepted.add((S[0], s))
    return accepted


@pytest.mark.parametrize("seed", range(4))
def test_verifier_accepts_exactly_the_true_characterization(toy_params, seed):
    """Accepted (x, s) pairs: x = x(g^ab H(m)) and s = canonical s modulo ord_n(g)."""
    pub, priv = keygen(toy_params, 5, 7, random.Random(seed))
    m = f"sweep {seed}".encode()
    sig = sign(priv, pub, m)
    order = multiplicative_order(pub.g, 35)
    expected = {(sig.Sx, s) for s in range(24) if s % order == sig.s % order}
    assert _sweep(pub, m) == expected


def test_both_checks_are_necessary(toy_keys):
    pub, priv = toy_keys
    params, curve, P, ctx = pub.params, pub.params.curve, pub.P, pub.params.pairing
    m = b"necessity"
    h = hash_scalar(m, 35)
    H = map_to_point(m, P, 35, curve)
    z = pow(pub.r, h, 35)
    only_first, only_second = [], []
    for u in range(1, 35):
        S = scalar_mul(u, P, curve)
        for s in range(24):
            w = pow(pub.g, s, 35)
            T = e_n(scalar_mul(w, S, curve), P, ctx)
            U = e_n(scalar_mul(z, H, curve), pub.Q, ctx)
            first = U in (T, nm.fp2_inv(T, 139))
            second = scalar_mul(w, P, curve) == scalar_mul(z, pub.R, curve)
            if first != second:
                (only_first if first else only_second).append((S[0], s))
                assert not verify(pub, m, Signature(S[0], s))
    assert only_first and only_second
