"""Integer utilities: primality, prime generation, CRT, and factorization.

Factorization is trial division followed by Pollard rho with Brent's cycle
detection. Composite cofactors that survive the iteration budget are returned
as unfactored rather than guessed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@lru_cache(maxsize=8)
def primes_below(limit: int) -> tuple[int, ...]:
    """All primes < limit by a numpy sieve of Eratosthenes."""
    if limit <= 2:
        return ()
    sieve = np.ones(limit, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for q in range(3, math.isqrt(limit - 1) + 1, 2):
        if sieve[q]:
            sieve[q * q :: 2 * q] = False
    return tuple(int(v) for v in np.flatnonzero(sieve))


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
        if D == 13 and math.isqrt(n) ** 2 == n:
            return False
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    inv2 = pow(2, -1, n)
    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def is_prime(n: int) -> bool:
    """Deterministic below 3.3e24 (Miller-Rabin with fixed bases), BPSW above."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    if n < 47 * 47:
        return True
    if n < 3317044064679887385961981:
        return all(_strong_probable_prime(n, a) for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41))
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def next_prime(n: int) -> int:
    """Smallest prime > n."""
    n += 1
    while not is_prime(n):
        n += 1
    return n


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Combine x = r1 (mod m1) and x = r2 (mod m2) for coprime moduli."""
    inv = pow(m1, -1, m2)
    x = r1 + m1 * ((r2 - r1) * inv % m2)
    return x, m1 * m2


def symmetric_residue(x: int, m: int) -> int:
    x %= m
    return x - m if 2 * x > m else x


def pollard_brent(n: int, budget: int, rng: random.Random) -> int | None:
    """Return a nontrivial factor of composite odd n, or None if the budget ran out."""
    if n % 2 == 0:
        return 2
    spent = 0
    while spent < budget:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            spent += r
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


@dataclass
class IntegerFactorization:
    """n = sign * prod(p^e) * prod(cofactors); cofactors are composite and unsplit."""

    n: int
    primes: dict[int, int] = field(default_factory=dict)
    cofactors: list[int] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.cofactors

    def odd_primes(self) -> list[int]:
        return sorted(p for p in self.primes if p != 2)

    def to_json(self) -> dict:
        return {
            "n": str(self.n),
            "primes": [[str(p), e] for p, e in sorted(self.primes.items())],
            "cofactors": [str(c) for c in self.cofactors],
            "complete": self.complete,
        }


# (B1, B2, curves) per ECM stage, smallest first
ECM_STAGES = ((2_000, 200_000, 50), (11_000, 1_100_000, 100),
              (50_000, 5_000_000, 300), (250_000, 25_000_000, 600))


def ecm_split(n: int, stages: int, seed: int) -> int | None:
    """A nontrivial factor of composite n by staged ECM (sympy), or None."""
    try:
        from sympy.ntheory.ecm import _ecm_one_factor
    except ImportError:  # private helper; absence just leaves a cofactor
        return None

    for b1, b2, curves in ECM_STAGES[:stages]:
        try:
            d = _ecm_one_factor(n, b1, b2, curves, seed=seed)
        except ValueError:
            d = None
        if d and 1 < d < n:
            return int(d)
    return None


def factor_integer(n: int, effort: int = 200_000, trial_limit: int = 10**6,
                   seed: int = 0, hints=(), ecm_stages: int = len(ECM_STAGES)) -> IntegerFactorization:
    """Factor n by trial division, hint splitting, budgeted Pollard-Brent, then staged ECM.

    `hints` are integers whose gcds with n are used to split it before any
    search; divisors of n known from structure make large cases tractable.
    Parts that survive every stage are returned as cofactors.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    result = IntegerFactorization(n)
    m = abs(n)
    for q in primes_below(trial_limit):
        if q * q > m:
            break
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            result.primes[q] = e
    if m == 1:
        return result
    if m < trial_limit * trial_limit:
        result.primes[m] = result.primes.get(m, 0) + 1
        return result

    pending = [m]
    hints = [abs(h) for h in hints if abs(h) > 1]

    def hint_split(part):
        for h in hints:
            g = math.gcd(part, h)
            if 1 < g < part:
                return g
        return None

    rng = random.Random(seed)
    while pending:
        part = pending.pop()
        if part == 1:
            continue
        if is_prime(part):
            result.primes[part] = result.primes.get(part, 0) + 1
            continue
        r = math.isqrt(part)
        if r * r == part:
            pending.extend([r, r])
            continue
        d = hint_split(part)
        if d is None:
            d = pollard_brent(part, effort, rng)
        if d is None and ecm_stages > 0:
            d = ecm_split(part, ecm_stages, seed + 1)
        if d is None:
            result.cofactors.append(part)
        else:
            pending.extend([d, part // d])
    result.cofactors.sort()
    return result
