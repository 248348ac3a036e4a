"""Rational functions over F_q, heights, and p-th power detection.

Membership in the p^i-th powers of the algebraic closure's function field
reduces to F_q(t): Frobenius is bijective on F_q, so a rational function with
F_q coefficients is a p-th power over the closure iff it is one over F_q. The
test is therefore exact coefficient-wise root extraction.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DivisionByZero, NotAPthPower, Undefined
from .intpoly import IntPoly
from .poly import Poly, gcd


@dataclass(frozen=True, eq=False)
class RationalFn:
    num: Poly
    den: Poly

    def __post_init__(self):
        if self.den.is_zero():
            raise DivisionByZero("rational function with zero denominator")

    @classmethod
    def make(cls, num: Poly, den: Poly) -> RationalFn:
        """Reduce to lowest terms with a monic denominator."""
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            return cls(num, Poly.constant(1, num.desc))
        g = gcd(num, den)
        num, den = num.exact_div(g), den.exact_div(g)
        inv = den.lc().inverse()
        return cls(num.scale(inv), den.scale(inv))

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        r = RationalFn.make(self.num, self.den)
        return hash((r.num, r.den))

    def is_constant(self) -> bool:
        r = RationalFn.make(self.num, self.den)
        return r.num.degree() <= 0 and r.den.degree() == 0

    def __mul__(self, other: RationalFn) -> RationalFn:
        return RationalFn.make(self.num * other.num, self.den * other.den)

    def __add__(self, other: RationalFn) -> RationalFn:
        return RationalFn.make(self.num * other.den + other.num * self.den, self.den * other.den)

    def pth_root(self) -> RationalFn:
        r = RationalFn.make(self.num, self.den)
        return RationalFn(r.num.pth_root(), r.den.pth_root())

    def __str__(self):
        if self.den.degree() == 0 and self.den.is_monic():
            return str(self.num)
        return f"({self.num})/({self.den})"


def height(f) -> int:
    """Degree for polynomials (h(0) = 0 by convention), max(deg num, deg den) for fractions."""
    if isinstance(f, RationalFn):
        r = RationalFn.make(f.num, f.den)
        if r.num.is_zero():
            raise Undefined("height of the zero rational function")
        return max(r.num.degree(), r.den.degree())
    if isinstance(f, (Poly, IntPoly)):
        return max(f.degree(), 0)
    raise TypeError(f"no height for {type(f).__name__}")


def pth_root_chain(f: RationalFn) -> list[RationalFn]:
    """[f, f^(1/p), f^(1/p^2), ...] until the next root does not exist."""
    r = RationalFn.make(f.num, f.den)
    if r.is_constant():
        raise Undefined("every constant is a p^i-th power for all i")
    chain = [r]
    while True:
        try:
            r = r.pth_root()
        except NotAPthPower:
            return chain
        chain.append(r)


def pth_power_degree(f) -> int:
    """Largest i with f a p^i-th power (f nonconstant)."""
    if isinstance(f, Poly):
        f = RationalFn(f, Poly.constant(1, f.desc))
    return len(pth_root_chain(f)) - 1
