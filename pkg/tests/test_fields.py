import pytest

from arbordyn.fields import legendre, prime_field, quadratic_extension, sqrt_in_closure
from arbordyn.polyalg import Poly

SMALL_PRIMES = [3, 5, 7, 11, 13, 17, 31, 41, 97]


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_sqrt_matches_brute_force(p):
    F = prime_field(p)
    squares = {(x * x) % p for x in range(p)}
    for a in range(p):
        e = F.elem(a)
        assert e.is_square() == (a in squares)
        if a in squares:
            r = e.sqrt()
            assert r * r == e


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_extension_sqrt_covers_all_of_fp(p):
    F = prime_field(p)
    for a in range(1, p):
        r = sqrt_in_closure(F.elem(a))
        assert r * r == quadratic_extension(p).elem(a) or r * r == F.elem(a)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_extension_field_axioms(p):
    K = quadratic_extension(p)
    elems = list(K.elements())
    assert len(elems) == p * p
    nonzero = [x for x in elems if x]
    for x in nonzero:
        assert x * x.inverse() == K.one()
    # the multiplicative group is cyclic of order p^2 - 1
    assert all(x ** (p * p - 1) == K.one() for x in nonzero)


def test_legendre_and_large_prime_path():
    p = (1 << 61) - 1
    assert legendre(4, p) == 1
    F = prime_field(p)
    x = F.elem(123456789)
    assert (x * x).sqrt() in (x, -x)
    f = Poly.from_ints([1, 2, 1], F)
    assert str(f) == "t^2+2*t+1"


def test_rejects_non_primes():
    for bad in (1, 2, 9, 15):
        with pytest.raises(ValueError):
            prime_field(bad)
