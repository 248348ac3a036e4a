"""Dense univariate polynomials over F_p and F_{p^2}.

Coefficients are held in a numpy array of shape (k, n), ascending in degree,
with k = 1 for F_p and k = 2 for F_{p^2} (row 0 is the F_p part, row 1 the
coefficient of the adjoined root u). Word-sized primes (p < 2^31) use int64
so that every product of two residues fits; larger primes fall back to
object arrays of Python integers.
"""

from __future__ import annotations

import math
import random

import numpy as np

from ..errors import DivisionByZero, DomainMismatch, NotAPthPower, Undefined
from ..fields import FieldDesc, FieldElem, prime_field
from . import _kernels

NEG_INF = -math.inf

_INT64_LIMIT = 1 << 31


def _dtype(p: int):
    return np.int64 if p < _INT64_LIMIT else object


def _trim(c: np.ndarray) -> np.ndarray:
    n = c.shape[1]
    if n == 0 or c[0, n - 1] or (c.shape[0] == 2 and c[1, n - 1]):
        return c
    nz = np.flatnonzero(c.any(axis=0))
    n = int(nz[-1]) + 1 if len(nz) else 0
    return c[:, :n]


def conv_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact (a * b) mod p for 1-D residue arrays."""
    if len(a) == 0 or len(b) == 0:
        return np.zeros(0, dtype=a.dtype)
    if a.dtype == object:
        return np.convolve(a, b) % p
    if len(b) > len(a):
        a, b = b, a
    if p * p * len(b) < (1 << 63):
        return np.convolve(a, b) % p
    # split b into 16-bit halves so partial sums stay below 2^63
    if len(b) >= (1 << 16):
        raise OverflowError("operand too long for int64 convolution")
    lo = b & 0xFFFF
    hi = b >> 16
    r_lo = np.convolve(a, lo) % p
    r_hi = np.convolve(a, hi) % p
    return (r_lo + (r_hi << 16) % p) % p


class Poly:
    """Immutable polynomial in t over a finite field."""

    __slots__ = ("desc", "c")

    def __init__(self, desc: FieldDesc, c: np.ndarray, _normalized=False):
        self.desc = desc
        if not _normalized:
            c = np.asarray(c, dtype=_dtype(desc.p))
            if c.ndim == 1:
                c = c.reshape(1, -1)
            if c.shape[0] != desc.k:
                raise ValueError("coefficient array has wrong number of components")
            c = _trim(c % desc.p)
        c.flags.writeable = False
        self.c = c

    # construction -----------------------------------------------------
    @classmethod
    def from_ints(cls, coeffs, p_or_desc) -> Poly:
        """Ascending integer coefficients reduced into F_p (or the F_p part of F_{p^2})."""
        desc = p_or_desc if isinstance(p_or_desc, FieldDesc) else prime_field(p_or_desc)
        dt = _dtype(desc.p)
        c = np.zeros((desc.k, len(coeffs)), dtype=dt)
        if len(coeffs):
            c[0] = np.array([int(v) % desc.p for v in coeffs], dtype=dt)
        return cls(desc, c)

    @classmethod
    def from_elems(cls, elems, desc: FieldDesc) -> Poly:
        c = np.zeros((desc.k, len(elems)), dtype=_dtype(desc.p))
        for i, e in enumerate(elems):
            if isinstance(e, int):
                e = desc.elem(e)
            if e.desc != desc:
                raise DomainMismatch(f"{e.desc} vs {desc}")
            c[:, i] = e.coords
        return cls(desc, c)

    @classmethod
    def zero(cls, desc: FieldDesc) -> Poly:
        return cls(desc, np.zeros((desc.k, 0), dtype=_dtype(desc.p)), True)

    @classmethod
    def constant(cls, value, desc: FieldDesc) -> Poly:
        if isinstance(value, int):
            value = desc.elem(value)
        return cls.from_elems([value], desc)

    @classmethod
    def monomial(cls, n: int, desc: FieldDesc, coeff=1) -> Poly:
        if isinstance(coeff, int):
            coeff = desc.elem(coeff)
        return cls.from_elems([desc.zero()] * n + [coeff], desc)

    @classmethod
    def random(cls, degree: int, desc: FieldDesc, rng: random.Random, monic=False) -> Poly:
        if degree < 0:
            return cls.zero(desc)
        rows = [[rng.randrange(desc.p) for _ in range(degree + 1)] for _ in range(desc.k)]
        c = np.array(rows, dtype=_dtype(desc.p))
        c[:, degree] = 0
        if monic:
            c[0, degree] = 1
        else:
            while not c[:, degree].any():
                c[:, degree] = [rng.randrange(desc.p) for _ in range(desc.k)]
        return cls(desc, c)

    def _new(self, c: np.ndarray) -> Poly:
        return Poly(self.desc, _trim(c), True)

    # inspection -------------------------------------------------------
    @property
    def p(self) -> int:
        return self.desc.p

    def __len__(self):
        return self.c.shape[1]

    def degree(self):
        """Degree in t; NEG_INF for the zero polynomial."""
        n = self.c.shape[1]
        return n - 1 if n else NEG_INF

    def is_zero(self) -> bool:
        return self.c.shape[1] == 0

    def __bool__(self):
        return not self.is_zero()

    def is_constant(self) -> bool:
        return self.c.shape[1] <= 1

    def coeff(self, i: int) -> FieldElem:
        if 0 <= i < len(self):
            return FieldElem(self.desc, tuple(int(v) for v in self.c[:, i]))
        return self.desc.zero()

    def coeffs(self) -> list[FieldElem]:
        return [self.coeff(i) for i in range(len(self))]

    def int_coeffs(self) -> list[int]:
        """Ascending residues (F_p only)."""
        if self.desc.k != 1:
            raise DomainMismatch("integer coefficients only exist over F_p")
        return [int(v) for v in self.c[0]]

    def lc(self) -> FieldElem:
        if self.is_zero():
            return self.desc.zero()
        return self.coeff(len(self) - 1)

    def is_monic(self) -> bool:
        return not self.is_zero() and self.lc() == self.desc.one()

    def is_prime_field(self) -> bool:
        """True if every coefficient lies in F_p."""
        return self.desc.k == 1 or not self.c[1].any()

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.desc == other.desc and self.c.shape == other.c.shape and bool((self.c == other.c).all())

    def __hash__(self):
        return hash((self.desc, tuple(map(int, self.c.ravel()))))

    def sort_key(self):
        """Degree first, then ascending coefficient vectors."""
        return (len(self), tuple(tuple(int(v) for v in col) for col in self.c.T[::-1]))

    # arithmetic -------------------------------------------------------
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.desc != self.desc:
                raise DomainMismatch(f"{self.desc} vs {other.desc}")
            return other
        if isinstance(other, (int, FieldElem)):
            return Poly.constant(other, self.desc)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        c = np.zeros((self.desc.k, n), dtype=self.c.dtype)
        c[:, : len(self)] += self.c
        c[:, : len(other)] += other.c
        return self._new(c % self.p)

    __radd__ = __add__

    def __neg__(self):
        return self._new((-self.c) % self.p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> Poly:
        if isinstance(s, int):
            s = self.desc.elem(s)
        return self._new(_scale(self.c, s))

    def __mul__(self, other):
        if isinstance(other, (int, FieldElem)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(_mul(self.c, other.c, self.desc))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly.constant(1, self.desc)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q, r = _divmod(self.c, other.c, self.desc)
        return self._new(q), self._new(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(_rem(self.c, other.c, self.desc))

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ValueError("division is not exact")
        return q

    def divides(self, other: Poly) -> bool:
        """True if self | other."""
        return not (other % self)

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        lc = self.lc()
        if lc == self.desc.one():
            return self
        return self.scale(lc.inverse())

    def derivative(self) -> Poly:
        n = len(self)
        if n <= 1:
            return Poly.zero(self.desc)
        idx = np.arange(1, n, dtype=self.c.dtype) % self.p
        return self._new(self.c[:, 1:] * idx % self.p)

    def powmod(self, e: int, modulus: Poly) -> Poly:
        result = Poly.constant(1, self.desc) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def __call__(self, x):
        """Evaluate at a field element (Horner)."""
        if isinstance(x, int):
            x = self.desc.elem(x)
        acc = self.desc.zero()
        for i in range(len(self) - 1, -1, -1):
            acc = acc * x + self.coeff(i)
        return acc

    def compose(self, other: Poly) -> Poly:
        acc = Poly.zero(self.desc)
        for i in range(len(self) - 1, -1, -1):
            acc = acc * other + self.coeff(i)
        return acc

    def frobenius(self) -> Poly:
        """Apply x -> x^p to every coefficient."""
        return self._new(_frob(self.c, self.desc))

    def pth_root(self) -> Poly:
        """g with g^p = self; raises NotAPthPower unless only exponents divisible by p occur."""
        p = self.p
        if self.is_zero():
            return self
        mask = np.ones(len(self), dtype=bool)
        mask[::p] = False
        if self.c[:, mask].any():
            raise NotAPthPower("an exponent not divisible by p has a nonzero coefficient")
        # coefficient-wise inverse Frobenius; Frobenius has order k on F_{p^k}
        sub = self.c[:, ::p].copy()
        return self._new(_frob(sub, self.desc) if self.desc.k == 2 else sub)

    def to_extension(self, ext: FieldDesc) -> Poly:
        """Embed an F_p polynomial into F_{p^2}[t]."""
        if self.desc == ext:
            return self
        if self.desc.k != 1 or ext.k != 2 or ext.p != self.p:
            raise DomainMismatch("can only embed F_p into F_{p^2}")
        c = np.zeros((2, len(self)), dtype=self.c.dtype)
        c[0] = self.c[0]
        return Poly(ext, c, True)

    def to_prime_field(self) -> Poly:
        if self.desc.k == 1:
            return self
        if self.c[1].any():
            raise DomainMismatch("coefficients do not lie in F_p")
        return Poly(prime_field(self.p), self.c[:1].copy(), True)

    def __repr__(self):
        from .text import format_poly

        return f"Poly({format_poly(self)!s} over {self.desc})"

    def __str__(self):
        from .text import format_poly

        return format_poly(self)


# kernels ---------------------------------------------------------------

def _scale(c: np.ndarray, s: FieldElem) -> np.ndarray:
    p = s.desc.p
    if s.desc.k == 1:
        return c * s.coords[0] % p
    s0, s1 = s.coords
    m0, m1, _ = s.desc.modulus
    a0, a1 = c[0], c[1]
    hi = a1 * s1 % p
    r0 = (a0 * s0 - hi * m0) % p
    r1 = (a0 * s1 % p + a1 * s0 - hi * m1) % p
    return np.stack([r0, r1])


def _mul(a: np.ndarray, b: np.ndarray, desc: FieldDesc) -> np.ndarray:
    p = desc.p
    if a.shape[1] == 0 or b.shape[1] == 0:
        return np.zeros((desc.k, 0), dtype=a.dtype)
    if desc.k == 1:
        return conv_mod(a[0], b[0], p).reshape(1, -1)
    m0, m1, _ = desc.modulus
    a0b0 = conv_mod(a[0], b[0], p)
    a1b1 = conv_mod(a[1], b[1], p)
    cross = (conv_mod(a[0], b[1], p) + conv_mod(a[1], b[0], p)) % p
    r0 = (a0b0 - a1b1 * m0) % p
    r1 = (cross - a1b1 * m1) % p
    return np.stack([r0, r1])


def _frob(c: np.ndarray, desc: FieldDesc) -> np.ndarray:
    if desc.k == 1:
        return c
    p = desc.p
    m1 = desc.modulus[1]
    return np.stack([(c[0] - c[1] * m1) % p, (-c[1]) % p])


def _lc_inverse(b: np.ndarray, desc: FieldDesc) -> FieldElem:
    lc = FieldElem(desc, tuple(int(v) for v in b[:, -1]))
    return lc.inverse()


def _fast(a: np.ndarray, desc: FieldDesc) -> bool:
    return _kernels.AVAILABLE and desc.k == 1 and a.dtype == np.int64


def _divmod(a: np.ndarray, b: np.ndarray, desc: FieldDesc):
    if b.shape[1] == 0:
        raise DivisionByZero("polynomial division by zero")
    if _fast(a, desc):
        q, r = _kernels.divmod_k1(a[0], b[0], desc.p)
        return q.reshape(1, -1), r.reshape(1, -1)
    p = desc.p
    db = b.shape[1] - 1
    na = a.shape[1]
    if na <= db:
        return np.zeros((desc.k, 0), dtype=a.dtype), a.copy()
    inv = _lc_inverse(b, desc)
    bm = _scale(b, inv)
    r = a.copy()
    q = np.zeros((desc.k, na - db), dtype=a.dtype)
    if desc.k == 1:
        r0, b0, q0 = r[0], bm[0], q[0]
        for i in range(na - 1, db - 1, -1):
            s = r0[i]
            if s:
                q0[i - db] = s
                r0[i - db : i + 1] = (r0[i - db : i + 1] - s * b0) % p
    else:
        for i in range(na - 1, db - 1, -1):
            s = r[:, i]
            if s.any():
                q[:, i - db] = s
                elem = FieldElem(desc, (int(s[0]), int(s[1])))
                r[:, i - db : i + 1] = (r[:, i - db : i + 1] - _scale(bm, elem)) % p
    q = _scale(q, inv)
    return q, r[:, :db]


def _rem(a: np.ndarray, b: np.ndarray, desc: FieldDesc) -> np.ndarray:
    if b.shape[1] == 0:
        raise DivisionByZero("polynomial division by zero")
    p = desc.p
    db = b.shape[1] - 1
    na = a.shape[1]
    if na <= db:
        return a
    if desc.k != 1 or _fast(a, desc):
        return _divmod(a, b, desc)[1]
    inv = _lc_inverse(b, desc)
    b0 = _scale(b, inv)[0]
    r0 = a[0].copy()
    if db == 0:
        return r0[:0].reshape(1, 0)
    for i in range(na - 1, db - 1, -1):
        s = r0[i]
        if s:
            r0[i - db : i + 1] = (r0[i - db : i + 1] - s * b0) % p
    return r0[:db].reshape(1, -1)


# gcd and resultant -----------------------------------------------------

def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) is undefined."""
    if f.desc != g.desc:
        raise DomainMismatch(f"{f.desc} vs {g.desc}")
    if f.is_zero() and g.is_zero():
        raise Undefined("gcd(0, 0)")
    desc = f.desc
    a, b = f.c, g.c
    if _fast(a, desc):
        return Poly(desc, _kernels.gcd_k1(a[0], b[0], desc.p).reshape(1, -1), True)
    if a.shape[1] < b.shape[1]:
        a, b = b, a
    while b.shape[1]:
        a, b = b, _trim(_rem(a, b, desc))
    return Poly(desc, a, True).monic()


def lcm(f: Poly, g: Poly) -> Poly:
    return (f * g).exact_div(gcd(f, g)).monic()


def xgcd(f: Poly, g: Poly):
    """(d, s, t) with s*f + t*g = d monic."""
    r0, r1 = f, g
    s0, s1 = Poly.constant(1, f.desc), Poly.zero(f.desc)
    t0, t1 = Poly.zero(f.desc), Poly.constant(1, f.desc)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        raise Undefined("gcd(0, 0)")
    inv = r0.lc().inverse()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def resultant(f: Poly, g: Poly) -> FieldElem:
    """Res(f, g) by the Euclidean algorithm over the field."""
    if f.desc != g.desc:
        raise DomainMismatch(f"{f.desc} vs {g.desc}")
    desc = f.desc
    if f.is_zero() or g.is_zero():
        return desc.zero()
    if _fast(f.c, desc):
        return desc.elem(int(_kernels.resultant_k1(f.c[0], g.c[0], desc.p)))
    a, b = f, g
    res = desc.one()
    while True:
        da, db = a.degree(), b.degree()
        if db == 0:
            return res * b.lc() ** da
        r = a % b
        if r.is_zero():
            return desc.zero()
        dr = r.degree()
        if da % 2 == 1 and db % 2 == 1:
            res = -res
        res = res * b.lc() ** (da - dr)
        a, b = b, r


def discriminant(f: Poly) -> FieldElem:
    """(-1)^(d(d-1)/2) Res(f, f') / lc(f)."""
    d = f.degree()
    if d < 1:
        raise Undefined("discriminant of a constant")
    fp = f.derivative()
    if fp.is_zero():
        return f.desc.zero()
    # Sylvester convention with the formal degree d - 1 of f'
    r = resultant(f, fp) * f.lc() ** (d - 1 - fp.degree())
    if (d * (d - 1) // 2) % 2:
        r = -r
    return r / f.lc()
