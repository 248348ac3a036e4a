"""Random quadratic maps for property tests, split by height-lemma case."""

import random

from arbordyn.orbit import QuadMap, is_isotrivial
from arbordyn.polyalg import IntPoly, Poly, height
from arbordyn.fields import prime_field


def _poly(rng, deg, p):
    if p is None:
        c = [rng.randint(-4, 4) for _ in range(deg)] + [rng.choice([-2, -1, 1, 2])] if deg >= 0 else []
        return IntPoly(c)
    return Poly.random(deg, prime_field(p), rng)


def random_map(rng: random.Random, p=None, case="unequal", max_deg=3) -> QuadMap:
    """A non-isotrivial map with c1 != 0.

    case "unequal": h(gamma) != h(c1); case "equal": h(gamma) = h(c1).
    """
    while True:
        if case == "unequal":
            dg, dc = rng.sample(range(0, max_deg + 1), 2)
            if rng.random() < 0.2:
                dg = -1  # gamma = 0
        else:
            dg = dc = rng.randint(1, max_deg)
        gamma = _poly(rng, dg, p)
        c1 = _poly(rng, dc, p)
        if case == "equal" and dg >= 2 and rng.random() < 0.5:
            # force cancellation in gamma + c1 so that kappa > 1
            c1 = _poly(rng, rng.randint(1, dg - 1), p) - gamma
        if c1.is_zero():
            continue
        phi = QuadMap(gamma, c1)
        if is_isotrivial(phi):
            continue
        if case == "equal" and height(gamma) != height(c1):
            continue
        if case == "unequal" and height(gamma) == height(c1):
            continue
        return phi
