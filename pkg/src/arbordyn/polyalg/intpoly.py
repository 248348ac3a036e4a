"""Dense polynomials in t with arbitrary-precision integer coefficients.

Resultants, discriminants and gcds are computed multimodularly: images over
word-sized primes are combined by CRT until the modulus exceeds twice a
Hadamard bound. A subresultant PRS implementation is kept as an independent
check.
"""

from __future__ import annotations

import math
from ..errors import DivisionByZero, Undefined
from ..fields import prime_field
from ..ntheory import crt_pair, is_prime, symmetric_residue
from .poly import NEG_INF, Poly
from .poly import gcd as _gcd_mod
from .poly import resultant as _resultant_mod


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _kronecker_mul(a, b):
    ma = max(abs(v) for v in a)
    mb = max(abs(v) for v in b)
    bits = (ma * mb * min(len(a), len(b))).bit_length() + 2
    A = 0
    for v in reversed(a):
        A = (A << bits) + v
    B = 0
    for v in reversed(b):
        B = (B << bits) + v
    C = A * B
    n = len(a) + len(b) - 1
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(n):
        digit = C & mask
        if digit >= half:
            digit -= 1 << bits
        out.append(digit)
        C = (C - digit) >> bits
    return out


class IntPoly:
    """Immutable polynomial over Z; coefficients ascending, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def t(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __len__(self):
        return len(self.coeffs)

    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({self})"

    def __str__(self):
        from .text import format_terms

        return format_terms(list(self.coeffs))

    def _coerce(self, other):
        if isinstance(other, int):
            return IntPoly.constant(other)
        if isinstance(other, IntPoly):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-v for v in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(v * other for v in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        if min(len(a), len(b)) >= 24:
            return IntPoly(_kronecker_mul(a, b))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = IntPoly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative(self) -> IntPoly:
        return IntPoly(i * v for i, v in enumerate(self.coeffs) if i)

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for v in self.coeffs:
            g = math.gcd(g, v)
            if g == 1:
                break
        return g

    def primitive_part(self) -> IntPoly:
        """self / content, normalized to a positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc() < 0:
            c = -c
        return IntPoly(v // c for v in self.coeffs)

    def __call__(self, x):
        acc = 0
        for v in reversed(self.coeffs):
            acc = acc * x + v
        return acc

    def compose(self, other: IntPoly) -> IntPoly:
        acc = IntPoly()
        for v in reversed(self.coeffs):
            acc = acc * other + v
        return acc

    def reduce(self, p_or_desc) -> Poly:
        return Poly.from_ints(self.coeffs, p_or_desc)

    def norm_inf(self) -> int:
        return max((abs(v) for v in self.coeffs), default=0)

    def norm2_ceil(self) -> int:
        s = sum(v * v for v in self.coeffs)
        r = math.isqrt(s)
        return r if r * r == s else r + 1

    def divmod_exact(self, other: IntPoly) -> IntPoly:
        """Quotient of an exact division in Z[t]; raises ValueError otherwise."""
        if not other.coeffs:
            raise DivisionByZero("division by the zero polynomial")
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        lcb = other.coeffs[-1]
        b = other.coeffs
        if len(r) - 1 < db:
            if any(r):
                raise ValueError("division is not exact")
            return IntPoly()
        q = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            s = r[i]
            if s:
                qi, rem = divmod(s, lcb)
                if rem:
                    raise ValueError("division is not exact")
                q[i - db] = qi
                base = i - db
                for j, bj in enumerate(b):
                    if bj:
                        r[base + j] -= qi * bj
        if any(r[:db]):
            raise ValueError("division is not exact")
        return IntPoly(q)

    def divides(self, other: IntPoly) -> bool:
        try:
            other.divmod_exact(self)
        except ValueError:
            return False
        return True

    def pseudo_rem(self, other: IntPoly) -> IntPoly:
        """lc(other)^(deg self - deg other + 1) * self mod other."""
        db = other.degree()
        e = self.degree() - db + 1
        if e <= 0:
            return self
        r = list(self.coeffs)
        b = other.coeffs
        lcb = b[-1]
        while len(r) - 1 >= db and r:
            s = r[-1]
            shift = len(r) - 1 - db
            r = [v * lcb for v in r]
            for j, bj in enumerate(b):
                r[shift + j] -= s * bj
            r = list(_trim(r))
            e -= 1
        return IntPoly(v * lcb**e for v in r)


# multimodular machinery -----------------------------------------------

_PRIME_START = (1 << 31) - 1
_WORD_PRIMES: list[int] = []


def word_primes():
    """Descending primes below 2^31, memoized across calls."""
    i = 0
    while True:
        if i == len(_WORD_PRIMES):
            n = _WORD_PRIMES[-1] - 1 if _WORD_PRIMES else _PRIME_START
            while not is_prime(n):
                n -= 1
            _WORD_PRIMES.append(n)
        yield _WORD_PRIMES[i]
        i += 1


def resultant_bound(f: IntPoly, g: IntPoly) -> int:
    """Hadamard bound |Res(f, g)| <= |f|_2^deg g * |g|_2^deg f."""
    return f.norm2_ceil() ** max(g.degree(), 0) * g.norm2_ceil() ** max(f.degree(), 0)


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) in Z by CRT over word-sized primes."""
    if f.is_zero() or g.is_zero():
        return 0
    if f.degree() == 0:
        return f.lc() ** g.degree()
    if g.degree() == 0:
        return g.lc() ** f.degree()
    bound = resultant_bound(f, g)
    lcs = f.lc() * g.lc()
    value, modulus = 0, 1
    for p in word_primes():
        if lcs % p == 0:
            continue
        r = _resultant_mod(f.reduce(p), g.reduce(p)).coords[0]
        value, modulus = crt_pair(value, modulus, r, p)
        if modulus > 2 * bound:
            return symmetric_residue(value, modulus)
    raise AssertionError("unreachable")


def discriminant(f: IntPoly) -> int:
    """(-1)^(d(d-1)/2) Res(f, f') / lc(f), exact."""
    d = f.degree()
    if d < 1:
        raise Undefined("discriminant of a constant")
    r = resultant(f, f.derivative())
    if (d * (d - 1) // 2) % 2:
        r = -r
    q, rem = divmod(r, f.lc())
    assert rem == 0
    return q


def resultant_subresultant(A: IntPoly, B: IntPoly) -> int:
    """Res(A, B) by the subresultant PRS (slow; used as an independent oracle)."""
    if A.is_zero() or B.is_zero():
        return 0
    a, b = A.content(), B.content()
    A, B = IntPoly(v // a for v in A.coeffs), IntPoly(v // b for v in B.coeffs)
    s = 1
    t = a ** B.degree() * b ** A.degree()
    if A.degree() < B.degree():
        A, B = B, A
        if A.degree() % 2 and B.degree() % 2:
            s = -1
    if B.degree() == 0:
        return s * t * B.lc() ** A.degree()
    g = h = 1
    while True:
        delta = A.degree() - B.degree()
        if A.degree() % 2 and B.degree() % 2:
            s = -s
        R = A.pseudo_rem(B)
        if R.is_zero():
            return 0
        A = B
        div = g * h**delta
        B = IntPoly(v // div for v in R.coeffs)
        g = A.lc()
        if delta == 0:
            h = h
        else:
            h = g**delta // h ** (delta - 1)
        if B.degree() == 0:
            dA = A.degree()
            h = B.lc() ** dA // h ** (dA - 1) if dA >= 1 else h
            return s * t * h


def discriminant_subresultant(f: IntPoly) -> int:
    d = f.degree()
    r = resultant_subresultant(f, f.derivative())
    if (d * (d - 1) // 2) % 2:
        r = -r
    return r // f.lc()


def gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Greatest common divisor in Z[t] with positive leading coefficient."""
    if f.is_zero() and g.is_zero():
        raise Undefined("gcd(0, 0)")
    if f.is_zero():
        return g.primitive_part() * g.content()
    if g.is_zero():
        return f.primitive_part() * f.content()
    c = math.gcd(f.content(), g.content())
    f, g = f.primitive_part(), g.primitive_part()
    if f.degree() == 0 or g.degree() == 0:
        return IntPoly.constant(c)
    if f == g:
        return f * c
    b = math.gcd(f.lc(), g.lc())
    lcs = f.lc() * g.lc()
    best_deg = min(f.degree(), g.degree()) + 1
    value, modulus, previous = None, 1, None
    for p in word_primes():
        if lcs % p == 0:
            continue
        h = _gcd_mod(f.reduce(p), g.reduce(p))
        dh = h.degree()
        if dh == 0:
            return IntPoly.constant(c)
        if dh > best_deg:
            continue
        image = [v * b % p for v in h.int_coeffs()]
        if dh < best_deg:
            best_deg, value, modulus, previous = dh, image, p, None
        else:
            value = [crt_pair(x, modulus, y, p)[0] for x, y in zip(value, image)]
            modulus *= p
        candidate = IntPoly(symmetric_residue(v, modulus) for v in value).primitive_part()
        if candidate == previous and candidate.divides(f) and candidate.divides(g):
            return candidate * c
        previous = candidate
    raise AssertionError("unreachable")


def squarefree_decomposition(f: IntPoly):
    """Yun's algorithm over Q on the primitive part.

    Returns (unit, [(g_i, i), ...]) with f = unit * prod g_i^i, every g_i
    primitive, squarefree, pairwise coprime, positive leading coefficient;
    unit is the signed content.
    """
    if f.is_zero():
        raise Undefined("squarefree decomposition of 0")
    pp = f.primitive_part()
    unit = f.lc() // pp.lc()
    if pp.degree() == 0:
        return unit, []
    out = []
    d1 = pp.derivative()
    g = gcd(pp, d1)
    b = pp.divmod_exact(g)
    c = d1.divmod_exact(g)
    d = c - b.derivative()
    i = 1
    while b.degree() > 0:
        a = gcd(b, d) if d else b.primitive_part()
        if a.degree() > 0:
            out.append((a, i))
        b = b.divmod_exact(a)
        c = d.divmod_exact(a) if d else d
        d = c - b.derivative()
        i += 1
    return unit, out


def squarefree_part(f: IntPoly) -> IntPoly:
    """Product of the primitive factors of odd multiplicity (constant 1 if none)."""
    _, parts = squarefree_decomposition(f)
    out = IntPoly.constant(1)
    for g, m in parts:
        if m % 2:
            out = out * g
    return out


def radical(f: IntPoly) -> IntPoly:
    _, parts = squarefree_decomposition(f)
    out = IntPoly.constant(1)
    for g, _ in parts:
        out = out * g
    return out


def reduce_all(polys, p: int):
    desc = prime_field(p)
    return [f.reduce(desc) for f in polys]
