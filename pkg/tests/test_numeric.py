import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualsig import numeric as nm
from dualsig.vectors import EXAMPLE

from oracles import schoolbook_fp2_mul, sieve, square_roots, trial_division_is_prime

P = 139
fp = st.integers(min_value=0, max_value=P - 1)
fp2 = st.tuples(fp, fp)
nonzero_fp2 = fp2.filter(lambda x: x != (0, 0))


def test_mod_pow_examples():
    assert nm.mod_pow(2, EXAMPLE.b, EXAMPLE.n) == EXAMPLE.r
    assert nm.mod_pow(2, 5, 35) == 32
    for x, m in [(0, 2), (7, 35), (10**40, 97)]:
        assert nm.mod_pow(x, 0, m) == 1


def test_mod_pow_rejects_small_modulus():
    with pytest.raises(ValueError):
        nm.mod_pow(3, 4, 1)


@given(st.integers(0, 10**30), st.integers(0, 10**6), st.integers(0, 10**6), st.integers(2, 10**30))
def test_mod_pow_exponent_law(g, a, b, m):
    assert nm.mod_pow(g, a, m) * nm.mod_pow(g, b, m) % m == nm.mod_pow(g, a + b, m)


def test_mod_inv():
    assert nm.mod_inv(1, 35) == 1
    assert nm.mod_inv(2, 35) == 18
    with pytest.raises(nm.NotInvertibleError) as exc:
        nm.mod_inv(5, 35)
    assert exc.value.gcd == 5


@given(st.integers(1, 10**20), st.integers(2, 10**20))
def test_mod_inv_property(x, m):
    if nm.gcd(x, m) != 1:
        with pytest.raises(nm.NotInvertibleError):
            nm.mod_inv(x, m)
    else:
        y = nm.mod_inv(x, m)
        assert 0 <= y < m and x * y % m == 1 % m


def test_legendre():
    assert nm.legendre(0, P) == 0
    assert nm.legendre(P - 1, P) == -1
    assert nm.legendre(30, P) == 1
    with pytest.raises(ValueError):
        nm.legendre(3, 8)


def test_sqrt_mod():
    assert nm.sqrt_mod(4, P) == 2
    assert nm.sqrt_mod(30, P) == 13
    with pytest.raises(nm.NoSquareRootError):
        nm.sqrt_mod(10, P)


def test_sqrt_and_legendre_agree_on_whole_field():
    for x in range(P):
        roots = square_roots(x, P)
        if nm.legendre(x, P) == -1:
            assert not roots
            with pytest.raises(nm.NoSquareRootError):
                nm.sqrt_mod(x, P)
        else:
            y = nm.sqrt_mod(x, P)
            assert y == min(roots) and y <= (P - 1) // 2


def test_is_prime_examples():
    assert nm.is_prime(139, 64)
    assert not nm.is_prime(1, 64)
    assert nm.is_prime(EXAMPLE.q, 64)
    assert nm.is_prime(EXAMPLE.p1) and nm.is_prime(EXAMPLE.p2)
    assert not nm.is_prime(EXAMPLE.n)


def test_is_prime_matches_sieve_below_a_million():
    flags = sieve(10**6)
    assert all(nm.is_prime(k) == bool(flags[k]) for k in range(10**6))


@pytest.mark.parametrize("k", [
    561, 41041, 3215031751, 3825123056546413051,
    # strong pseudoprime to the first 13 prime bases
    3317044064679887385961981,
    2**127 - 1, 2**521 - 1,
])
def test_is_prime_hard_cases(k):
    assert nm.is_prime(k) == (k in (2**127 - 1, 2**521 - 1))


def test_is_prime_carmichael_products_above_deterministic_bound():
    # Carmichael number (6t+1)(12t+1)(18t+1) with all three factors prime
    t = next(t for t in range(10**8, 10**9)
             if all(nm.is_prime(c * t + 1) for c in (6, 12, 18)))
    assert not nm.is_prime((6 * t + 1) * (12 * t + 1) * (18 * t + 1))


def test_next_prime():
    assert nm.next_prime(140) == 149
    assert nm.next_prime(139) == 139
    assert nm.next_prime(0) == 2
    assert nm.next_prime(3) == 3


@given(st.integers(0, 20000))
def test_next_prime_is_smallest(k):
    q = nm.next_prime(k)
    assert trial_division_is_prime(q) and q >= k
    assert not any(trial_division_is_prime(j) for j in range(k, q))


def test_gcd():
    phi = (EXAMPLE.p1 - 1) * (EXAMPLE.p2 - 1)
    assert nm.gcd(0, 17) == 17
    assert nm.gcd(24, 36) == 12
    assert nm.gcd(phi * 3, phi * 5) == phi
    assert nm.gcd(0, 0) == 0


def test_hex_roundtrip():
    assert nm.to_hex(0) == "0"
    assert nm.to_hex(255) == "ff"
    assert nm.from_hex("FF") == 255
    for bad in ["", "0x1f", "-1", "g"]:
        with pytest.raises(ValueError):
            nm.from_hex(bad)


def test_fp2_mul_examples():
    i = (0, 1)
    assert nm.fp2_mul(i, i, P) == (P - 1, 0)
    assert nm.fp2_mul((12, 0), (100, 0), P) == (1200 % P, 0)


@given(fp2, fp2)
def test_fp2_mul_matches_schoolbook(x, y):
    assert nm.fp2_mul(x, y, P) == schoolbook_fp2_mul(x, y, P)
    assert nm.fp2_sqr(x, P) == schoolbook_fp2_mul(x, x, P)


@given(fp2, fp2, fp2)
def test_fp2_mul_commutative_associative(x, y, z):
    assert nm.fp2_mul(x, y, P) == nm.fp2_mul(y, x, P)
    assert nm.fp2_mul(nm.fp2_mul(x, y, P), z, P) == nm.fp2_mul(x, nm.fp2_mul(y, z, P), P)


def test_fp2_inv_examples():
    assert nm.fp2_inv((1, 0), P) == (1, 0)
    assert nm.fp2_inv((0, 1), P) == (0, P - 1)
    with pytest.raises(ZeroDivisionError):
        nm.fp2_inv((0, 0), P)


def test_fp2_inv_every_element():
    for u in range(P):
        for v in range(P):
            if (u, v) != (0, 0):
                assert nm.fp2_mul((u, v), nm.fp2_inv((u, v), P), P) == (1, 0)


@given(nonzero_fp2, st.integers(0, 10**6), st.integers(0, 10**6))
def test_fp2_pow(x, a, b):
    assert nm.fp2_pow(x, 0, P) == (1, 0)
    assert nm.fp2_pow(x, P * P - 1, P) == (1, 0)
    assert nm.fp2_pow(x, a + b, P) == nm.fp2_mul(nm.fp2_pow(x, a, P), nm.fp2_pow(x, b, P), P)


@settings(max_examples=20)
@given(st.integers(2, 2**64))
def test_fp2_pow_large_field(seed):
    rng = random.Random(seed)
    p = EXAMPLE.q
    x = (rng.randrange(p), rng.randrange(1, p))
    assert nm.fp2_pow(x, p * p - 1, p) == (1, 0)
