"""Mason-Stothers over F_p(t) as a checkable inequality.

For coprime a, b with a + b + c = 0 the ratio b/c satisfies

    h(b/c) <= p^e (|V| - 2),

with V the places of the closure where a, b or c vanishes (and infinity
unless deg a = deg b = deg c), and e the p-th power degree of b/c.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from ..fields import FieldDesc
from ..polyalg import Poly, gcd, radical


@dataclass(frozen=True)
class MasonStothersReport:
    status: str
    reason: str = ""
    height: int = 0
    places: int = 0
    e: int = 0
    rhs: int = 0

    @property
    def checked(self) -> bool:
        return self.status == "Checked"

    @property
    def holds(self) -> bool:
        return self.checked and self.height <= self.rhs

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "reason": self.reason,
            "height": self.height,
            "places": self.places,
            "e": self.e,
            "rhs": self.rhs,
            "holds": self.holds,
        }


def _rejected(reason: str) -> MasonStothersReport:
    return MasonStothersReport("PreconditionFailed", reason)


def _exponent_pth_degree(f: Poly) -> int:
    """Largest i with f a p^i-th power; constants count as infinitely divisible.

    Over a perfect field f is a p^i-th power exactly when every exponent
    with a nonzero coefficient is divisible by p^i.
    """
    exps = [k for k in range(1, len(f)) if f.c[:, k].any()]
    if not exps:
        return 1 << 30
    g = math.gcd(*exps)
    i = 0
    while g % f.desc.p == 0:
        g //= f.desc.p
        i += 1
    return i


def place_count(a: Poly, b: Poly, c: Poly) -> int:
    """Distinct zeros of abc over the closure, plus infinity when the degrees differ.

    a, b, c are pairwise coprime, so the radicals are taken separately.
    """
    finite = sum(f.degree() if f.degree() <= 1 else radical(f).degree() for f in (a, b, c))
    return finite + (0 if a.degree() == b.degree() == c.degree() else 1)


def mason_stothers_check(a: Poly, b: Poly) -> MasonStothersReport:
    """Both sides of the genus-0 abc inequality for a + b + c = 0.

    Precondition failures come back as status PreconditionFailed rather
    than exceptions. When b/c is a p-th power the exponent e is extracted
    and the right-hand side scaled by p^e.
    """
    if a.is_zero() or b.is_zero():
        return _rejected("a and b must be nonzero")
    c = -(a + b)
    if c.is_zero():
        return _rejected("c = -a-b vanishes")
    if gcd(a, b).degree() > 0:
        return _rejected("a and b share a factor")
    # gcd(a, b) = 1 forces gcd(b, c) = 1, so b/c is already reduced
    if b.degree() == 0 and c.degree() == 0:
        return _rejected("b/c is constant")
    e = min(_exponent_pth_degree(b), _exponent_pth_degree(c))
    h = max(b.degree(), c.degree())
    v = place_count(a, b, c)
    rhs = a.desc.p ** e * (v - 2)
    return MasonStothersReport("Checked", "", h, v, e, rhs)


def random_triple(desc: FieldDesc, rng: random.Random, max_degree: int = 6,
                  frobenius_rate: float = 0.25) -> tuple[Poly, Poly]:
    """A random pair meeting the preconditions, by rejection.

    With probability frobenius_rate both are raised to the p-th power
    once, so that the e > 0 branch is exercised too.
    """
    while True:
        a = Poly.random(rng.randint(0, max_degree), desc, rng)
        b = Poly.random(rng.randint(0, max_degree), desc, rng)
        if a.is_zero() or b.is_zero() or (a + b).is_zero():
            continue
        if gcd(a, b).degree() > 0:
            continue
        if b.degree() == 0 and (a + b).degree() == 0:
            continue
        if rng.random() < frobenius_rate:
            a, b = a ** desc.p, b ** desc.p
        return a, b
