"""Prime fields F_p and their quadratic extensions F_{p^2}.

Elements of F_{p^2} are written a + b*u where u is a root of the least
monic irreducible quadratic over F_p (least in ascending coefficient order).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import DivisionByZero, DomainMismatch, NotASquare, ParseError
from .ntheory import is_prime


@dataclass(frozen=True)
class FieldDesc:
    p: int
    k: int = 1
    modulus: tuple[int, ...] = (0, 1)

    def __post_init__(self):
        if self.p % 2 == 0 or not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not an odd prime")
        if self.k not in (1, 2):
            raise ValueError("only F_p and F_{p^2} are supported")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if self.k == 2:
            m0, m1 = self.modulus[0] % self.p, self.modulus[1] % self.p
            if legendre(m1 * m1 - 4 * m0, self.p) != -1:
                raise ValueError("modulus has a root in F_p")

    @property
    def q(self) -> int:
        return self.p ** self.k

    def __str__(self):
        return f"F_{self.p}" if self.k == 1 else f"F_{self.p}^2"

    def elem(self, *coords) -> FieldElem:
        coords = tuple(int(c) % self.p for c in coords)
        coords = coords + (0,) * (self.k - len(coords))
        if len(coords) != self.k:
            raise ValueError("too many coordinates")
        return FieldElem(self, coords)

    def zero(self) -> FieldElem:
        return FieldElem(self, (0,) * self.k)

    def one(self) -> FieldElem:
        return FieldElem(self, (1,) + (0,) * (self.k - 1))

    def gen(self) -> FieldElem:
        """The adjoined root u (k = 2 only)."""
        if self.k != 2:
            raise ValueError("F_p has no adjoined generator")
        return FieldElem(self, (0, 1))

    def elements(self):
        if self.k == 1:
            return [FieldElem(self, (a,)) for a in range(self.p)]
        return [FieldElem(self, (a, b)) for b in range(self.p) for a in range(self.p)]

    def parse(self, text: str) -> FieldElem:
        return parse_elem(self, text)


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=None)
def prime_field(p: int) -> FieldDesc:
    return FieldDesc(p)


@lru_cache(maxsize=None)
def quadratic_extension(p: int) -> FieldDesc:
    """F_{p^2} with the least irreducible x^2 + m1 x + m0 (m0 compared first)."""
    for m0 in range(p):
        for m1 in range(p):
            if legendre(m1 * m1 - 4 * m0, p) == -1:
                return FieldDesc(p, 2, (m0, m1, 1))
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class FieldElem:
    desc: FieldDesc
    coords: tuple[int, ...]

    def _check(self, other) -> FieldElem:
        if isinstance(other, int):
            return self.desc.elem(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        if other.desc != self.desc:
            raise DomainMismatch(f"{self.desc} vs {other.desc}")
        return other

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.desc.p
        return FieldElem(self.desc, tuple((a + b) % p for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        p = self.desc.p
        return FieldElem(self.desc, tuple(-a % p for a in self.coords))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.desc.p
        if self.desc.k == 1:
            return FieldElem(self.desc, (self.coords[0] * other.coords[0] % p,))
        a0, a1 = self.coords
        b0, b1 = other.coords
        m0, m1, _ = self.desc.modulus
        # u^2 = -m1 u - m0
        hi = a1 * b1
        c0 = (a0 * b0 - hi * m0) % p
        c1 = (a0 * b1 + a1 * b0 - hi * m1) % p
        return FieldElem(self.desc, (c0, c1))

    __rmul__ = __mul__

    def norm(self) -> int:
        """Norm to F_p (the element itself for k = 1)."""
        if self.desc.k == 1:
            return self.coords[0]
        return (self * self.frobenius()).coords[0]

    def inverse(self) -> FieldElem:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        p = self.desc.p
        if self.desc.k == 1:
            return FieldElem(self.desc, (pow(self.coords[0], -1, p),))
        conj = self.frobenius()
        n_inv = pow(self.norm(), -1, p)
        return FieldElem(self.desc, tuple(c * n_inv % p for c in conj.coords))

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.desc.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.desc.elem(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.desc == other.desc and self.coords == other.coords

    def __hash__(self):
        return hash((self.desc, self.coords))

    def frobenius(self) -> FieldElem:
        """a -> a^p."""
        if self.desc.k == 1:
            return self
        a0, a1 = self.coords
        m1 = self.desc.modulus[1]
        p = self.desc.p
        # u^p is the other root of the modulus: -m1 - u
        return FieldElem(self.desc, ((a0 - a1 * m1) % p, -a1 % p))

    def is_square(self) -> bool:
        if self.is_zero():
            return True
        if self.desc.k == 1:
            return legendre(self.coords[0], self.desc.p) == 1
        # a is a square in F_{p^2} iff its norm is a square in F_p
        return legendre(self.norm(), self.desc.p) == 1

    def sqrt(self) -> FieldElem:
        """Canonical square root: the lexicographically smaller coordinate vector."""
        if self.is_zero():
            return self
        if not self.is_square():
            raise NotASquare(f"{self} is not a square in {self.desc}")
        r = _tonelli_shanks(self)
        s = -r
        return r if r.coords < s.coords else s

    def __str__(self):
        if self.desc.k == 1:
            return str(self.coords[0])
        a, b = self.coords
        return f"{a}+{b}*u"

    def __repr__(self):
        return f"FieldElem({self}, {self.desc})"


def _non_residue(desc: FieldDesc) -> FieldElem:
    if desc.k == 1:
        for a in range(2, desc.p):
            if legendre(a, desc.p) == -1:
                return desc.elem(a)
    for b in range(1, desc.p):
        for a in range(desc.p):
            z = desc.elem(a, b)
            if not z.is_square():
                return z
    raise AssertionError("unreachable")


def _tonelli_shanks(a: FieldElem) -> FieldElem:
    q = a.desc.q
    s, d = 0, q - 1
    while d % 2 == 0:
        d //= 2
        s += 1
    if s == 1:
        return a ** ((q + 1) // 4)
    z = _non_residue(a.desc)
    m, c, t, r = s, z ** d, a ** d, a ** ((d + 1) // 2)
    one = a.desc.one()
    while t != one:
        i, t2 = 0, t
        while t2 != one:
            t2 = t2 * t2
            i += 1
        b = c ** (1 << (m - i - 1))
        m, c = i, b * b
        t, r = t * c, r * b
    return r


_ELEM_RE = re.compile(r"^\s*(-?\d+)\s*(?:\+\s*(-?\d+)\s*\*\s*u)?\s*$")


def parse_elem(desc: FieldDesc, text: str) -> FieldElem:
    m = _ELEM_RE.match(text)
    if not m:
        raise ParseError(f"not a field element: {text!r}", 0)
    a, b = m.group(1), m.group(2)
    if b is not None and desc.k == 1:
        raise ParseError("u-component given for a prime field", text.index("u"))
    return desc.elem(int(a), int(b or 0))


def sqrt_in_closure(a: FieldElem) -> FieldElem:
    """Canonical square root of a prime-field element, in F_p when possible, else in F_{p^2}."""
    if a.desc.k != 1:
        return a.sqrt()
    if a.is_square():
        return a.sqrt()
    ext = quadratic_extension(a.desc.p)
    return ext.elem(a.coords[0]).sqrt()
