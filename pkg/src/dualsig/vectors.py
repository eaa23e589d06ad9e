"""Known-answer vectors: the published 256-bit example key and a toy curve.

The published example lists g^(a(1-b)) mod n and R = g^(a-ab) P with values
that agree with the true ones modulo p1 but not modulo p2 (the published R is
exactly the published g^(a(1-b)) times P, so the slip is in that one integer).
Both published values are kept for reference; the self-test checks against
the recomputed ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import numeric as nm
from .curve import CurveParams, is_on_curve, scalar_mul
from .pairing import PairingContext, e_n


def _digits(*chunks: str) -> int:
    return int("".join(chunks))


@dataclass(frozen=True)
class ExampleVectors:
    p1: int
    p2: int
    n: int
    q: int
    Px: int
    Py: int
    g: int
    a: int
    b: int
    r: int
    g_pow_a: int
    g_pow_a_1_minus_b: int
    Qx: int
    Qy: int
    Rx: int
    Ry: int


EXAMPLE = ExampleVectors(
    p1=_digits("664810154161090130922129022943767028", "35774195899207559806860541669578637494231"),
    p2=_digits("115738576089152909314582339834842248600", "964273864643984203082855344579907038313"),
    n=_digits(
        "7694418061221480574591795362863949897453901238591237288218960",
        "73489112031191771739492678882017122636619912324577778582190244785",
        "4995757079440397354833472303",
    ),
    q=_digits(
        "3077767224488592229836718145145579958981560",
        "49543649491528758429395644812476708695797071552806849054",
        "64796492983111143287609791419983028317761589419333889211",
    ),
    Px=_digits(
        "24923438302879103041550933768873817553815859007663697223031249",
        "1954089508938594293101431086136135995118826706761382555145184472",
        "19689120752272772341649471097",
    ),
    Py=_digits(
        "737996997348676496665860701704072193490435615382792210827517600",
        "53853975535811642226331502606869434233624734779779132109106217320",
        "98503146107614456038383100",
    ),
    g=2,
    a=2**256 + 2**9 + 1,
    b=2**128 + 2**100 + 1,
    r=_digits(
        "6060473831180419028002527544274466669204983610931948163",
        "0443372486036335615842187469452441526711228464764659030012702057391799",
        "47005024449868606694311195640",
    ),
    g_pow_a=_digits(
        "30170327810598461233195990938464557925983833005888756028098",
        "11232191097667270756706255964182155241639553199078545733822454265640",
        "948748520452895571215190867",
    ),
    g_pow_a_1_minus_b=_digits(
        "3857587773717648331848455032166239256994191485267123001803014197710646",
        "114876269309738868078584455009928317179624056665048012774957556761717131706965836593",
    ),
    Qx=_digits(
        "72602489437435104105970705804391866233125909936984972829",
        "8940696371605185217447754783574707404696665922982911135520666",
        "7689244366615968601129874346167442208",
    ),
    Qy=_digits(
        "180478952381617534858771173117408315328111949924113880",
        "2179335269409050631413675108169733886226831548047728894457761",
        "5443538174923719718185915981630635761798",
    ),
    Rx=_digits(
        "3808113094778207791976092099179226667122451539557163308798002839424051",
        "561484982365283482310837719611204421766606632256015828697744704581444104860789825123",
    ),
    Ry=_digits(
        "3308072955314964657139991889210217320162564738151265462522823142128993",
        "588372701093177340361015603152144380567547180385801756926227540059629184521133257172",
    ),
)

# As printed in the published example; inconsistent modulo p2 (see module docstring).
PUBLISHED_G_POW_A_1_MINUS_B = _digits(
    "690123530133273230626309389424846277148918273893781109989",
    "3935523975261846628680897065414699668317030484535099301214764389216498",
    "622653557732787251147641864",
)
PUBLISHED_RX = _digits(
    "1015118668943965456705851882396491515571796697273863218",
    "55694497591433958158555098408768620625614580819753284158039188",
    "66764912971271957844142196652521538840",
)
PUBLISHED_RY = _digits(
    "11830609568816187455064602957532997672345403803742470622",
    "163211050426407526147503476874128489377669604873066020056701553",
    "914845581133039809142240526482663137",
)

TOY_P = 139
TOY_N = 35
TOY_P1, TOY_P2 = 5, 7


def toy_base_point() -> tuple:
    """First point of exact order 35 on y^2 = x^3 + x over F_139, scanning x upward."""
    curve = CurveParams(TOY_P, 1)
    for x in range(TOY_P):
        rhs = (x**3 + x) % TOY_P
        if nm.legendre(rhs, TOY_P) != 1:
            continue
        P = scalar_mul(4, (x, nm.sqrt_mod(rhs, TOY_P)), curve)
        if P is not None and scalar_mul(TOY_P1, P, curve) and scalar_mul(TOY_P2, P, curve):
            return P
    raise AssertionError("toy curve has no point of order 35")


def _example_checks(v: ExampleVectors):
    curve = CurveParams(v.q, 1)
    P = (v.Px, v.Py)
    phi = (v.p1 - 1) * (v.p2 - 1)
    g_ab_inv_exp = (v.a - v.a * v.b) % phi
    yield "n = p1*p2", lambda: v.p1 * v.p2 == v.n
    yield "q = 4n - 1 is prime", lambda: v.q == 4 * v.n - 1 and nm.is_prime(v.q)
    yield "ord(P) = n", lambda: (
        is_on_curve(P, curve)
        and scalar_mul(v.n, P, curve) is None
        and scalar_mul(v.p1, P, curve) is not None
        and scalar_mul(v.p2, P, curve) is not None
    )
    yield "r = g^b mod n", lambda: nm.mod_pow(v.g, v.b, v.n) == v.r
    yield "g^a mod n", lambda: nm.mod_pow(v.g, v.a, v.n) == v.g_pow_a
    yield "g^(a(1-b)) mod n", lambda: nm.mod_pow(v.g, g_ab_inv_exp, v.n) == v.g_pow_a_1_minus_b
    yield "Q = g^a P", lambda: scalar_mul(nm.mod_pow(v.g, v.a, v.n), P, curve) == (v.Qx, v.Qy)
    yield "R = g^(a-ab) P", lambda: scalar_mul(nm.mod_pow(v.g, g_ab_inv_exp, v.n), P, curve) == (v.Rx, v.Ry)


def _toy_bilinearity() -> bool:
    curve = CurveParams(TOY_P, 1)
    ctx = PairingContext(curve, TOY_N)
    P = toy_base_point()
    base = e_n(P, P, ctx)
    if nm.fp2_pow(base, TOY_N, TOY_P) != nm.FP2_ONE:
        return False
    multiples = [scalar_mul(u, P, curve) for u in range(TOY_N)]
    powers = [nm.fp2_pow(base, k, TOY_P) for k in range(TOY_N)]
    return all(
        e_n(multiples[u], multiples[v], ctx) == powers[u * v % TOY_N]
        for u in range(TOY_N)
        for v in range(TOY_N)
    )


def run_selftest(vectors: ExampleVectors = EXAMPLE) -> list[tuple[str, bool]]:
    """Run every known-answer check; a check that raises counts as failed."""
    checks = list(_example_checks(vectors))
    checks.append(("pairing bilinearity on E(F_139), n = 35", _toy_bilinearity))
    results = []
    for name, check in checks:
        try:
            ok = bool(check())
        except Exception:
            ok = False
        results.append((name, ok))
    return results
