"""Squarefree structure and irreducible factorization over F_q.

Squarefree decomposition follows the characteristic-p variant of Yun's
algorithm: a gcd with the derivative peels off multiplicities prime to p, and
what remains is a p-th power whose root is taken coefficient-wise. Irreducible
factorization is distinct-degree splitting followed by Cantor-Zassenhaus
equal-degree splitting (q odd).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..errors import Undefined
from ..fields import FieldElem
from .intpoly import IntPoly
from .intpoly import squarefree_decomposition as _int_sqf
from .poly import Poly, gcd

DEFAULT_SEED = 0x5EED


@dataclass
class Factorization:
    """unit * prod(poly^mult) reproduces the input exactly."""

    unit: FieldElem | int
    factors: list[tuple[Poly | IntPoly, int]] = field(default_factory=list)
    complete: bool = True

    def expand(self):
        if isinstance(self.unit, int):
            out = IntPoly.constant(self.unit)
        else:
            out = Poly.constant(self.unit, self.unit.desc)
        for g, m in self.factors:
            out = out * g**m
        return out

    def to_json(self) -> dict:
        return {
            "unit": str(self.unit),
            "factors": [{"poly": str(g), "mult": m} for g, m in self.factors],
            "complete": self.complete,
        }

    def __iter__(self):
        return iter(self.factors)


def squarefree_decomposition(f: Poly) -> Factorization:
    """f = lc(f) * prod g_i^m_i, g_i monic squarefree pairwise coprime.

    The `complete` flag reports irreducibility of the parts, so it is False
    here unless every part happens to be linear.
    """
    if f.is_zero():
        raise Undefined("squarefree decomposition of 0")
    unit = f.lc()
    parts = _sqf_monic(f.monic())
    parts.sort(key=lambda gm: (gm[1], gm[0].sort_key()))
    return Factorization(unit, parts, complete=all(g.degree() == 1 for g, _ in parts))


def _sqf_monic(f: Poly) -> list[tuple[Poly, int]]:
    if f.degree() <= 0:
        return []
    out = []
    c = gcd(f, f.derivative()) if f.derivative() else f
    w = f.exact_div(c)
    i = 1
    while w.degree() > 0:
        y = gcd(w, c)
        fac = w.exact_div(y)
        if fac.degree() > 0:
            out.append((fac.monic(), i))
        w = y
        c = c.exact_div(y)
        i += 1
    if c.degree() > 0:
        p = f.p
        root = c.monic().pth_root()
        out.extend((g, m * p) for g, m in _sqf_monic(root.monic()))
    return out


def squarefree_part_geometric(f: Poly) -> Poly:
    """Monic product of the odd-multiplicity parts: d with f = unit * d * square."""
    if f.is_zero():
        raise Undefined("squarefree part of 0")
    out = Poly.constant(1, f.desc)
    for g, m in _sqf_monic(f.monic()):
        if m % 2:
            out = out * g
    return out


def is_square_in_closure(f: Poly) -> bool:
    """True iff f = c * g^2 with c a constant (every constant is a square over the closure)."""
    if f.is_zero():
        raise Undefined("square test of 0")
    return all(m % 2 == 0 for _, m in _sqf_monic(f.monic()))


def is_square_arithmetic(f: Poly) -> bool:
    """True iff f is a square in F_q[t] itself (the unit must be a square in F_q)."""
    return is_square_in_closure(f) and f.lc().is_square()


def radical(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of f."""
    if f.is_zero():
        raise Undefined("radical of 0")
    f = f.monic()
    if f.degree() <= 1:
        return f
    d = f.derivative()
    if d.is_zero():
        return radical(f.pth_root())
    g = gcd(f, d)
    if g.degree() == 0:
        return f
    # w carries each factor whose multiplicity is prime to p
    w = f.exact_div(g)
    while True:
        y = gcd(g, w)
        if y.degree() == 0:
            break
        g = g.exact_div(y)
    if g.degree() == 0:
        return w
    return w * radical(g.pth_root())


def int_squarefree_decomposition(f: IntPoly) -> Factorization:
    """Squarefree decomposition over Z; parts are not claimed irreducible."""
    unit, parts = _int_sqf(f)
    return Factorization(unit, parts, complete=False)


# irreducible factorization --------------------------------------------

def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split monic squarefree f into products of irreducibles of equal degree."""
    q = f.desc.q
    out = []
    t = Poly.monomial(1, f.desc)
    h = t % f
    d = 0
    rest = f
    while rest.degree() >= 2 * (d + 1):
        d += 1
        h = h.powmod(q, rest)
        g = gcd(rest, h - t)
        if g.degree() > 0:
            out.append((g, d))
            rest = rest.exact_div(g)
            h = h % rest
    if rest.degree() > 0:
        out.append((rest, rest.degree()))
    return out


def equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus: split monic f, a product of degree-d irreducibles."""
    n = f.degree()
    if n == d:
        return [f]
    q = f.desc.q
    e = (q**d - 1) // 2
    while True:
        a = Poly.random(n - 1, f.desc, rng)
        if a.degree() <= 0:
            continue
        g = gcd(f, a)
        if 0 < g.degree() < n:
            break
        b = a.powmod(e, f) - 1
        if b.is_zero():
            continue
        g = gcd(f, b)
        if 0 < g.degree() < n:
            break
    return equal_degree(g, d, rng) + equal_degree(f.exact_div(g), d, rng)


def factor(f: Poly, seed: int = DEFAULT_SEED) -> Factorization:
    """Complete factorization over F_q; factors sorted by (degree, coefficients)."""
    if f.is_zero():
        raise Undefined("factorization of 0")
    rng = random.Random(seed)
    unit = f.lc()
    factors = []
    for part, m in _sqf_monic(f.monic()):
        for block, d in distinct_degree(part):
            for g in equal_degree(block, d, rng):
                factors.append((g, m))
    factors.sort(key=lambda gm: (gm[0].sort_key(), gm[1]))
    return Factorization(unit, factors, complete=True)


def is_irreducible(f: Poly) -> bool:
    if f.degree() <= 0:
        return False
    fac = factor(f)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1


def monic_square_root(f: Poly) -> Poly:
    """The monic g with g^2 = monic(f); NotASquare when some multiplicity is odd."""
    from ..errors import NotASquare

    if f.is_zero():
        raise Undefined("square root of 0")
    out = Poly.constant(1, f.desc)
    for g, m in _sqf_monic(f.monic()):
        if m % 2:
            raise NotASquare(f"{f} has a factor of odd multiplicity")
        out = out * g ** (m // 2)
    return out
