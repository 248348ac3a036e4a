import random
import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arbordyn.errors import CapExceeded, ParseError, PreconditionError
from arbordyn.orbit import (
    QuadMap,
    adjusted_orbit,
    clear_orbit_cache,
    disc_iterate,
    discriminant_recursion_check,
    format_map,
    height_profile,
    is_isotrivial,
    iterate,
    orbit_period,
    parse_map,
)
from arbordyn.polyalg import IntPoly, Poly, discriminant
from arbordyn.polyalg import intpoly as zx
from arbordyn.fields import quadratic_extension

from maps import random_map


def test_parse_examples():
    m = parse_map("x^2+t")
    assert m.gamma == IntPoly([]) and m.c1 == IntPoly([0, -1])
    m = parse_map("(x-t)^2+t+1")
    assert m.gamma == IntPoly([0, 1]) and m.c1 == IntPoly([-1, -1])
    m = parse_map("(x - (t^2))^2 - (t^3+1)")
    assert m.gamma == IntPoly([0, 0, 1]) and m.c1 == IntPoly([1, 0, 0, 1])


def test_parse_rejects_bad_input():
    for bad in ("x^3+t", "2*x^2+t", "x^2+t*x", "x^2+", "y^2"):
        with pytest.raises(ParseError):
            parse_map(bad)
    # monic in x but odd linear coefficient has no integral centre
    with pytest.raises(ParseError):
        parse_map("x^2+x+t")
    assert parse_map("x^2+x+t", 5).gamma == Poly.from_ints([2], 5)


@given(st.integers(0, 10**6), st.sampled_from([None, 3, 5, 13]))
def test_format_round_trip(seed, p):
    rng = random.Random(seed)
    phi = random_map(rng, p, rng.choice(["equal", "unequal"]))
    assert parse_map(format_map(phi), p) == phi


def test_orbit_x2_plus_t():
    orb = adjusted_orbit(parse_map("x^2+t"), 3)
    assert [str(v) for v in orb.c[1:4]] == ["-t", "t^2+t", "t^4+2*t^3+t^2+t"]
    assert [str(v) for v in orb.crit0[1:4]] == ["t", "t^2+t", "t^4+2*t^3+t^2+t"]


@pytest.mark.parametrize("p", [None, 5])
def test_orbit_agrees_with_iterates(p):
    rng = random.Random(7)
    for _ in range(5):
        phi = random_map(rng, p, "unequal", max_deg=2)
        orb = adjusted_orbit(phi, 4)
        for n in range(1, 5):
            coeffs = iterate(phi, n)
            at_gamma = sum((c * phi.gamma**i for i, c in enumerate(coeffs)), phi.zero())
            at_zero = coeffs[0]
            assert at_zero == orb.crit0[n]
            assert at_gamma == (-orb.c[1] if n == 1 else orb.c[n])


def test_cache_is_thread_safe():
    clear_orbit_cache()
    phi = parse_map("(x-t)^2+t^3+2", 7)
    out = []

    def work():
        out.append([str(v) for v in adjusted_orbit(phi, 9).c[1:10]])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(o == out[0] for o in out)


def test_isotriviality():
    assert is_isotrivial(parse_map("(x-t)^2+t+1", 3))
    assert not is_isotrivial(parse_map("x^2+t"))
    assert is_isotrivial(parse_map("x^2+1"))


def test_height_profile_kappa():
    # gamma = t^2, c1 = -t^2 + t: h(gamma + c1) = 1, kappa = log2(2/1) + 1 = 2
    phi = QuadMap.over_z([0, 0, 1], [0, 1, -1])
    prof = height_profile(phi)
    assert prof.equal_case and prof.h_gc == 1
    assert prof.kappa == 2
    assert not prof.beyond_kappa(2) and prof.beyond_kappa(3)


def test_orbit_period_examples():
    assert orbit_period(parse_map("(x-t)^2+t+1", 3), 20).to_json() == {"status": "Periodic", "tail": 2, "cycle": 1}
    assert orbit_period(parse_map("x^2-1", 5), 20).to_json() == {"status": "Periodic", "tail": 0, "cycle": 2}
    assert not orbit_period(parse_map("x^2+t", 3), 8).detected
    with pytest.raises(PreconditionError):
        orbit_period(parse_map("x^2+t"), 8)


def test_iterate_cap():
    with pytest.raises(CapExceeded):
        iterate(parse_map("x^2+t"), 13, cap=4096)


def _eval(coeffs, t0):
    return [c(t0) for c in coeffs]


def test_disc_iterate_against_specialised_resultants():
    """Delta_n(t0) equals the CRT discriminant of phi^(n)(x; t0) at many integer points."""
    phi = parse_map("x^2+t")
    for n in (1, 2, 3):
        delta = disc_iterate(phi, n)
        for t0 in range(-6, 7):
            spec = IntPoly(_eval(iterate(phi, n), t0))
            assert delta(t0) == zx.discriminant(spec)


def test_disc_iterate_over_f5_against_extension_points():
    rng = random.Random(5)
    K = quadratic_extension(5)
    phi = random_map(rng, 5, "unequal", max_deg=2)
    for n in (1, 2, 3):
        delta = disc_iterate(phi, n)
        for a in list(K.elements())[:25]:
            spec = Poly.from_elems([c.to_extension(K)(a) for c in iterate(phi, n)], K)
            assert delta.to_extension(K)(a) == discriminant(spec)


def test_recursion_x2_plus_t():
    phi = parse_map("x^2+t")
    exps = [discriminant_recursion_check(phi, n).exponent for n in (1, 2, 3, 4)]
    assert exps == [2, 4, 8, 16]
    rep = discriminant_recursion_check(phi, 3)
    assert rep.is_constant and rep.is_pm_power_of_two and rep.printed_exponent == 16
