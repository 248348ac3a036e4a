"""Quadratic maps (x - gamma)^2 - c1 over Z[t] or F_p[t] and their orbits."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded, IteratesInseparable, ParseError, PreconditionError
from .fields import FieldDesc, prime_field
from .polyalg import IntPoly, Poly, height, parse_bivariate
from .polyalg.rxpoly import rx_discriminant


@dataclass(frozen=True, eq=False)
class QuadMap:
    """phi = (x - gamma)^2 - c1 with gamma, c1 in Z[t] (IntPoly) or F_p[t] (Poly)."""

    gamma: IntPoly | Poly
    c1: IntPoly | Poly

    def __post_init__(self):
        if type(self.gamma) is not type(self.c1):
            raise TypeError("gamma and c1 must live in the same ring")
        if isinstance(self.gamma, Poly) and self.gamma.desc != self.c1.desc:
            raise TypeError("gamma and c1 must live over the same field")

    @classmethod
    def over_z(cls, gamma, c1) -> QuadMap:
        return cls(IntPoly(gamma), IntPoly(c1))

    @classmethod
    def over_fp(cls, gamma, c1, p: int) -> QuadMap:
        return cls(Poly.from_ints(gamma, p), Poly.from_ints(c1, p))

    @property
    def desc(self) -> FieldDesc | None:
        return self.gamma.desc if isinstance(self.gamma, Poly) else None

    @property
    def p(self) -> int | None:
        return self.gamma.desc.p if isinstance(self.gamma, Poly) else None

    @property
    def over_integers(self) -> bool:
        return isinstance(self.gamma, IntPoly)

    def ring_name(self) -> str:
        return "Z[t]" if self.over_integers else f"F_{self.p}[t]"

    def __eq__(self, other):
        if not isinstance(other, QuadMap):
            return NotImplemented
        return type(self.gamma) is type(other.gamma) and self.gamma == other.gamma and self.c1 == other.c1

    def __hash__(self):
        return hash((self.gamma, self.c1))

    def reduce(self, p: int) -> QuadMap:
        if not self.over_integers:
            raise PreconditionError("only maps over Z[t] can be reduced")
        desc = prime_field(p)
        return QuadMap(self.gamma.reduce(desc), self.c1.reduce(desc))

    def __call__(self, value):
        d = value - self.gamma
        return d * d - self.c1

    def zero(self):
        return self.gamma - self.gamma

    def is_square_map(self) -> bool:
        return self.c1.is_zero()

    def __str__(self):
        return format_map(self)

    def __repr__(self):
        return f"QuadMap({self} over {self.ring_name()})"


def parse_map(text: str, p: int | None = None) -> QuadMap:
    """Parse "(x-gamma)^2-c1", "x^2+f(t)", or any monic quadratic in x.

    Over Z the linear coefficient in x must be even so that gamma is integral.
    """
    terms = parse_bivariate(text)
    max_x = max((i for i, _ in terms), default=0)
    if max_x != 2:
        raise ParseError("a quadratic map must have degree 2 in x", 0)

    def coeff(i):
        n = max((j for (a, j) in terms if a == i), default=-1) + 1
        out = [0] * n
        for (a, j), v in terms.items():
            if a == i:
                out[j] = v
        return out

    lead, lin, const = coeff(2), coeff(1), coeff(0)
    if lead != [1]:
        raise ParseError("the map must be monic in x with constant leading coefficient", 0)
    if p is None:
        if any(v % 2 for v in lin):
            raise ParseError("the x-coefficient must be even over Z (gamma = -b/2)", 0)
        gamma = IntPoly([-v // 2 for v in lin])
        c1 = gamma * gamma - IntPoly(const)
        return QuadMap(gamma, c1)
    desc = prime_field(p)
    half = pow(2, -1, p)
    gamma = Poly.from_ints([-v * half for v in lin], desc)
    c1 = gamma * gamma - Poly.from_ints(const, desc)
    return QuadMap(gamma, c1)


def format_map(phi: QuadMap) -> str:
    """Canonical text "(x-(gamma))^2+f" with f = -c1, read back by parse_map."""
    head = "x^2" if phi.gamma.is_zero() else f"(x-({phi.gamma}))^2"
    if phi.c1.is_zero():
        return head
    f = str(-phi.c1)
    return head + (f if f.startswith("-") else "+" + f)


class OrbitCache:
    """Prefixes of the adjusted post-critical orbit and of the orbit of 0.

    c[1] = c1, c[2] = (-c1 - gamma)^2 - c1, c[n] = (c[n-1] - gamma)^2 - c1;
    crit0[n] = phi^n(0). Index 0 of each list is unused.
    """

    def __init__(self, phi: QuadMap):
        self.map = phi
        self.c = [None, phi.c1]
        self.crit0 = [None, phi(phi.zero())]
        self._lock = threading.Lock()

    def extend(self, n: int) -> OrbitCache:
        if n <= len(self.c) - 1:
            return self
        with self._lock:
            phi = self.map
            while len(self.c) <= n:
                m = len(self.c)
                if m == 2:
                    self.c.append(phi(-phi.c1))
                else:
                    self.c.append(phi(self.c[-1]))
                self.crit0.append(phi(self.crit0[-1]))
        return self

    def __len__(self):
        return len(self.c) - 1

    def to_json(self, n: int | None = None) -> list[str]:
        n = len(self) if n is None else n
        self.extend(n)
        return [str(v) for v in self.c[1 : n + 1]]


_CACHES: dict[QuadMap, OrbitCache] = {}
_CACHE_LOCK = threading.Lock()


def adjusted_orbit(phi: QuadMap, n: int) -> OrbitCache:
    """Memoized orbit cache populated through index n."""
    if n < 1:
        raise PreconditionError("n must be at least 1")
    with _CACHE_LOCK:
        cache = _CACHES.get(phi)
        if cache is None:
            cache = _CACHES[phi] = OrbitCache(phi)
    return cache.extend(n)


def clear_orbit_cache():
    with _CACHE_LOCK:
        _CACHES.clear()


def is_isotrivial(phi: QuadMap) -> bool:
    return (phi.gamma + phi.c1).degree() <= 0


@dataclass(frozen=True)
class HeightProfile:
    h_gamma: int
    h_c1: int
    h_phi: int
    h_gc: int
    kappa: Fraction | None = None
    kappa_ceiling: int | None = None

    @property
    def equal_case(self) -> bool:
        return self.h_gamma == self.h_c1

    def beyond_kappa(self, n: int) -> bool:
        """Exact test of n > kappa, i.e. 2^(n-1) * h(gamma + c1) > h(gamma)."""
        if not self.equal_case:
            raise PreconditionError("kappa is only defined when h(gamma) = h(c1)")
        return 2 ** (n - 1) * self.h_gc > self.h_gamma

    def predicted_c_degree(self, n: int) -> int | None:
        """Exact h(c_n) where the height lemma pins it down, else None."""
        if n < 1:
            raise ValueError("n >= 1")
        if not self.equal_case:
            return self.h_c1 if n == 1 else 2 ** (n - 1) * self.h_phi
        if self.h_gc > 0 and self.beyond_kappa(n):
            return 2 ** (n - 1) * self.h_gc
        return None

    def predicted_crit0_degree(self, n: int) -> int | None:
        if self.equal_case:
            return 2**n * self.h_gamma
        return None

    def to_json(self) -> dict:
        return {
            "h_gamma": self.h_gamma,
            "h_c1": self.h_c1,
            "h_phi": self.h_phi,
            "h_gc": self.h_gc,
            "kappa": None if self.kappa is None else str(self.kappa),
            "kappa_ceiling": self.kappa_ceiling,
        }


def height_profile(phi: QuadMap) -> HeightProfile:
    hg, hc = height(phi.gamma), height(phi.c1)
    hgc = height(phi.gamma + phi.c1)
    kappa = ceiling = None
    if hg == hc:
        if hgc == 0:
            raise PreconditionError("kappa needs a non-isotrivial map")
        ratio = Fraction(hg, hgc)
        # ceiling of log2(ratio) + 1 via exact integer search
        k = 0
        while Fraction(2**k) < ratio:
            k += 1
        ceiling = k + 1
        if ratio.denominator == 1 and ratio.numerator & (ratio.numerator - 1) == 0:
            kappa = Fraction(ratio.numerator.bit_length() - 1 + 1)
    return HeightProfile(hg, hc, max(hg, hc), hgc, kappa, ceiling)


# iterates ----------------------------------------------------------------

DEFAULT_ITERATE_CAP = 1 << 12


def iterate(phi: QuadMap, n: int, cap: int = DEFAULT_ITERATE_CAP) -> list:
    """phi^(n) as a list of t-polynomials indexed by x-degree (ascending)."""
    if n < 1:
        raise PreconditionError("n must be at least 1")
    if 2**n > cap:
        raise CapExceeded(f"x-degree 2^{n} exceeds cap {cap}")
    zero = phi.zero()
    one = zero + 1
    # phi(x) = x^2 - 2 gamma x + gamma^2 - c1
    cur = [phi.gamma * phi.gamma - phi.c1, phi.gamma * (-2), one]
    for _ in range(n - 1):
        shifted = list(cur)
        shifted[0] = shifted[0] - phi.gamma
        sq = [zero] * (2 * len(shifted) - 1)
        for i, a in enumerate(shifted):
            if a.is_zero():
                continue
            for j, b in enumerate(shifted):
                if not b.is_zero():
                    sq[i + j] = sq[i + j] + a * b
        sq[0] = sq[0] - phi.c1
        cur = sq
    return cur


def format_iterate(coeffs) -> str:
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c.is_zero():
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        s = str(c)
        if not mono:
            parts.append(s)
        elif s == "1":
            parts.append(mono)
        else:
            parts.append(f"({s})*{mono}")
    return "+".join(parts) if parts else "0"


def disc_iterate(phi: QuadMap, n: int):
    """Delta_n = disc_x(phi^(n)) as a t-polynomial; Delta_0 := 1."""
    if n == 0:
        return phi.zero() + 1
    return rx_discriminant(iterate(phi, n))


@dataclass
class RecursionReport:
    n: int
    delta_n: str
    ratio: str
    is_constant: bool
    is_pm_power_of_two: bool
    sign: int | None
    exponent: int | None
    printed_exponent: int
    matches_printed: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def discriminant_recursion_check(phi: QuadMap, n: int) -> RecursionReport:
    """Compare Delta_n with Delta_{n-1}^2 * c_n and report the observed power of 2.

    The printed exponent 2^(n+1) is recorded next to the observed one; only the
    structural claim (ratio = +-2^m) is evaluated.
    """
    if not 1 <= n <= 4:
        raise PreconditionError("n must lie in [1, 4]")
    orbit = adjusted_orbit(phi, n)
    cn = orbit.c[n]
    prev = disc_iterate(phi, n - 1)
    cur = disc_iterate(phi, n)
    if cur.is_zero() or prev.is_zero():
        raise IteratesInseparable(f"disc_x(phi^({n})) vanishes")
    if cn.is_zero():
        raise PreconditionError(f"c_{n} = 0")
    denom = prev * prev * cn
    ratio = _exact_div(cur, denom)
    const = ratio.degree() == 0
    sign = exponent = None
    if const:
        if phi.over_integers:
            v = ratio.lc()
            a = abs(v)
            if a & (a - 1) == 0:
                sign, exponent = (1 if v > 0 else -1), a.bit_length() - 1
        else:
            v = ratio.lc().coords[0]
            p = phi.p
            power = 1
            for m in range(p):
                if power == v:
                    sign, exponent = 1, m
                    break
                if (p - power) % p == v:
                    sign, exponent = -1, m
                    break
                power = power * 2 % p
    printed = 2 ** (n + 1)
    return RecursionReport(
        n=n,
        delta_n=str(cur),
        ratio=str(ratio),
        is_constant=const,
        is_pm_power_of_two=exponent is not None,
        sign=sign,
        exponent=exponent,
        printed_exponent=printed,
        matches_printed=exponent == printed,
    )


def _exact_div(a, b):
    if isinstance(a, IntPoly):
        return a.divmod_exact(b)
    return a.exact_div(b)


# periodicity ---------------------------------------------------------------

@dataclass(frozen=True)
class OrbitPeriod:
    tail: int | None
    cycle: int | None

    @property
    def detected(self) -> bool:
        return self.cycle is not None

    def to_json(self) -> dict:
        if not self.detected:
            return {"status": "NotDetectedWithinCap"}
        return {"status": "Periodic", "tail": self.tail, "cycle": self.cycle}


NOT_DETECTED = OrbitPeriod(None, None)


def orbit_period(phi: QuadMap, cap: int) -> OrbitPeriod:
    """Preperiod and period of gamma, phi(gamma), phi^2(gamma), ... if seen within cap steps."""
    if phi.over_integers:
        raise PreconditionError("orbit_period needs a finite coefficient field")
    seen = {}
    value = phi.gamma
    for i in range(cap + 1):
        if value in seen:
            j = seen[value]
            return OrbitPeriod(j, i - j)
        seen[value] = i
        value = phi(value)
    return NOT_DETECTED
