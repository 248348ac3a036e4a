import itertools
import random
from collections import Counter

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from arbordyn.errors import NotAPthPower, ParseError, Undefined
from arbordyn.fields import prime_field, quadratic_extension
from arbordyn.polyalg import (
    IntPoly,
    Poly,
    RationalFn,
    discriminant,
    factor,
    gcd,
    is_irreducible,
    is_square_in_closure,
    monic_square_root,
    parse_int_coeffs,
    pth_power_degree,
    radical,
    resultant,
    squarefree_decomposition,
    squarefree_part_geometric,
    xgcd,
)
from arbordyn.polyalg import intpoly as zx

from conftest import P, all_monic


def polys(p, max_deg=8):
    return st.lists(st.integers(0, p - 1), max_size=max_deg + 1).map(lambda c: P(c, p))


# ring laws ---------------------------------------------------------------

@given(polys(7), polys(7), polys(7))
def test_ring_laws_fp(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a - a == Poly.zero(a.desc)


@given(polys(5), polys(5))
def test_division_identity(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree() < b.degree()


@given(polys(5), polys(5))
def test_xgcd_bezout(a, b):
    if a.is_zero() and b.is_zero():
        return
    d, s, t = xgcd(a, b)
    assert s * a + t * b == d
    assert d == gcd(a, b)
    assert d.divides(a) and d.divides(b)


def test_extension_arithmetic_and_frobenius():
    K = quadratic_extension(5)
    rng = random.Random(2)
    for _ in range(30):
        f = Poly.random(rng.randint(0, 5), K, rng)
        g = Poly.random(rng.randint(0, 5), K, rng)
        assert (f * g).frobenius() == f.frobenius() * g.frobenius()
        assert (f**5).pth_root() == f


# factorization vs exhaustive trial division ----------------------------------

def brute_factor(f):
    """Monic irreducible factors by trial division over every monic polynomial."""
    p = f.p
    f = f.monic()
    out = Counter()
    d = 1
    while f.degree() >= 2 * d:
        for g in all_monic(p, d):
            while g.divides(f):
                out[g] += 1
                f = f.exact_div(g)
        d += 1
    if f.degree() > 0:
        out[f] += 1
    return out


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("deg", range(1, 7))
def test_factor_matches_trial_division(p, deg):
    rng = random.Random(p * 100 + deg)
    desc = prime_field(p)
    for _ in range(6 if p == 7 else 12):
        f = Poly.random(deg, desc, rng)
        fac = factor(f)
        assert fac.expand() == f
        assert Counter(dict((g, m) for g, m in fac.factors)) == brute_factor(f)
        for g, _ in fac.factors:
            assert is_irreducible(g)


@pytest.mark.parametrize("p", [3, 5])
def test_irreducible_count_matches_necklace_formula(p):
    for d in (1, 2, 3, 4):
        count = sum(1 for f in all_monic(p, d) if is_irreducible(f))
        mobius = {1: 1, 2: -1, 3: -1, 4: 0}
        expected = sum(mobius[d // k] * p**k for k in range(1, d + 1) if d % k == 0) // d
        assert count == expected


def test_factor_handles_pth_powers():
    f = P([1, 0, 0, 1], 3) ** 2 * P([0, 1], 3)  # (t^3+1)^2 t = (t+1)^6 t
    fac = factor(f)
    assert sorted((str(g), m) for g, m in fac.factors) == [("t", 1), ("t+1", 6)]


# squarefree structure ----------------------------------------------------

@pytest.mark.parametrize("p", [3, 5, 7])
def test_squarefree_decomposition_expands(p):
    rng = random.Random(p)
    desc = prime_field(p)
    for _ in range(40):
        f = Poly.random(rng.randint(1, 4), desc, rng) ** rng.randint(1, 2 * p) * Poly.random(rng.randint(0, 3), desc, rng)
        if f.is_zero():
            continue
        sq = squarefree_decomposition(f)
        assert sq.expand() == f
        parts = [g for g, _ in sq.factors]
        for a, b in itertools.combinations(parts, 2):
            assert gcd(a, b).degree() == 0
        rad = P([1], p)
        for g, _ in factor(f).factors:
            rad = rad * g
        assert radical(f) == rad


@pytest.mark.parametrize("p", [3, 5])
def test_square_in_closure_brute_force(p):
    desc = prime_field(p)
    squares = set()
    for d in range(0, 3):
        for g in all_monic(p, d):
            squares.add(g * g)
    for coeffs in itertools.product(range(p), repeat=5):
        f = Poly.from_ints(coeffs, desc)
        if f.is_zero():
            continue
        assert is_square_in_closure(f) == (f.monic() in squares)


def test_monic_square_root_and_geometric_part():
    f = P([1, 1], 5) ** 2 * P([0, 1], 5) ** 4
    assert monic_square_root(f.scale(prime_field(5).elem(3))) ** 2 == f
    assert squarefree_part_geometric(f * P([2, 1], 5)) == P([2, 1], 5)


# p-th powers ------------------------------------------------------------

@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("i", [0, 1, 2, 3])
def test_pth_power_degree_on_constructed_powers(p, i):
    rng = random.Random(31 * p + i)
    desc = prime_field(p)
    for _ in range(10):
        while True:
            g = Poly.random(rng.randint(1, 4), desc, rng)
            h = Poly.random(rng.randint(0, 3), desc, rng)
            if h.is_zero():
                continue
            r = RationalFn.make(g, h)
            if not r.is_constant() and pth_power_degree(r) == 0:
                break
        q = p**i
        assert pth_power_degree(RationalFn.make(g**q, h**q)) == i


def test_pth_root_refuses_non_powers():
    with pytest.raises(NotAPthPower):
        P([0, 1], 3).pth_root()
    with pytest.raises(Undefined):
        pth_power_degree(RationalFn.make(P([2], 3), P([1], 3)))


# integer resultants -------------------------------------------------------

def random_intpoly(rng, deg, bound=20):
    c = [rng.randint(-bound, bound) for _ in range(deg)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
    return IntPoly(c)


def test_crt_resultant_matches_subresultant():
    rng = random.Random(11)
    for _ in range(60):
        f = random_intpoly(rng, rng.randint(1, 20))
        g = random_intpoly(rng, rng.randint(1, 20))
        assert zx.resultant(f, g) == zx.resultant_subresultant(f, g)
        assert zx.discriminant(f) == zx.discriminant_subresultant(f) if f.degree() >= 1 else True


def test_resultant_against_sylvester_determinant_and_mod_p():
    # sympy.resultant can disagree in sign when lc < 0; the Sylvester determinant is the definition
    from sympy.polys.subresultants_qq_zz import sylvester

    rng = random.Random(12)
    t = sympy.Symbol("t")
    for _ in range(20):
        f = random_intpoly(rng, rng.randint(1, 8))
        g = random_intpoly(rng, rng.randint(1, 8))
        fs = sum(c * t**i for i, c in enumerate(f.coeffs))
        gs = sum(c * t**i for i, c in enumerate(g.coeffs))
        r = zx.resultant(f, g)
        assert r == sylvester(fs, gs, t).det()
        for p in (5, 7, 101):
            if f.lc() % p and g.lc() % p:
                assert resultant(f.reduce(p), g.reduce(p)).coords[0] == r % p


def test_cubic_discriminant():
    f = IntPoly([1, 1, 2, 1])
    assert zx.discriminant(f) == -23
    assert discriminant(f.reduce(23)).is_zero()


def test_integer_squarefree_against_sympy():
    rng = random.Random(13)
    t = sympy.Symbol("t")
    for _ in range(25):
        f = random_intpoly(rng, 2, 5) ** 2 * random_intpoly(rng, 3, 5) * IntPoly([rng.choice([2, 3, -6])])
        unit, parts = zx.squarefree_decomposition(f)
        prod = IntPoly.constant(unit)
        for g, m in parts:
            prod = prod * g**m
        assert prod == f
        fs = sum(c * t**i for i, c in enumerate(f.coeffs))
        assert sum(g.degree() for g, _ in parts) == sum(sympy.degree(g, t) for g, _ in sympy.sqf_list(fs)[1])


def test_integer_gcd_against_sympy():
    rng = random.Random(14)
    t = sympy.Symbol("t")
    for _ in range(25):
        h = random_intpoly(rng, rng.randint(1, 4), 6)
        f = h * random_intpoly(rng, rng.randint(1, 5), 6)
        g = h * random_intpoly(rng, rng.randint(1, 5), 6)
        G = zx.gcd(f, g)
        gs = sympy.gcd(*(sum(c * t**i for i, c in enumerate(x.coeffs)) for x in (f, g)))
        assert G.degree() == sympy.degree(gs, t)
        assert G.divides(f) and G.divides(g)


# text ---------------------------------------------------------------------

@given(st.lists(st.integers(-50, 50), max_size=8))
def test_int_text_round_trip(coeffs):
    f = IntPoly(coeffs)
    assert IntPoly(parse_int_coeffs(str(f))) == f


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_int_coeffs("t^2+*t")
    assert err.value.position == 4
