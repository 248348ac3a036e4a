"""Squarefree Zsigmondy sets, effective bound constants, and the global bound over Q.

Membership is decided with gcds only. Over F_p the reduction from the
algebraic closure is exact: an F_p-irreducible g is separable, all of its
roots carry the multiplicity of g in c_n, and g divides c_i iff one (hence
every) root does, because c_i has F_p coefficients. So "c_n has a squarefree
primitive divisor over the closure" is the same statement with F_p
irreducibles, and it only depends on the odd-multiplicity squarefree blocks
of c_n with the factors of earlier orbit elements removed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CapExceeded, DegenerateSquare, IllDefined, PreconditionError
from .insep import InsepCase, insep_degree, sqrt_c1
from .ntheory import factor_integer, primes_below
from .orbit import HeightProfile, QuadMap, adjusted_orbit, height_profile, is_isotrivial
from .polyalg import IntPoly, Poly, factor, gcd, height, radical, squarefree_part_geometric
from .polyalg import intpoly as zx
from .polyalg.factor import _sqf_monic

BOUND_CAP = 64
POLY_TEXT_CAP = 256

# Published values of N_phi, reported next to the computed one for comparison.
STATED_VALUES = {QuadMap.over_z([0], [0, -1]): 11}


# primitive divisors ---------------------------------------------------------

def _strip(block, earlier):
    """Remove from a squarefree block every factor it shares with earlier orbit elements."""
    for c in earlier:
        if block.degree() <= 0:
            break
        if isinstance(block, IntPoly):
            g = zx.gcd(block, c)
            if g.degree() > 0:
                block = block.divmod_exact(g)
        else:
            g = gcd(block, c)
            if g.degree() > 0:
                block = block.exact_div(g)
    return block


def _sqf_parts(f):
    if isinstance(f, IntPoly):
        return zx.squarefree_decomposition(f)[1]
    return _sqf_monic(f.monic())


def primitive_blocks(orbit, n: int) -> list[tuple]:
    """[(block, mult)]: squarefree products of the primitive divisors of c_n, grouped by multiplicity."""
    c = orbit.extend(n).c
    if c[n].is_zero():
        raise PreconditionError(f"c_{n} = 0")
    earlier = [c[i] for i in range(1, n) if not c[i].is_zero()]
    out = []
    for part, m in _sqf_parts(c[n]):
        block = _strip(part, earlier)
        if block.degree() > 0:
            out.append((block, m))
    return out


def primitive_divisors(orbit, n: int) -> list[tuple[Poly, int]]:
    """Irreducible primitive divisors of c_n over F_p with their multiplicities."""
    if orbit.map.over_integers:
        raise PreconditionError("irreducible primitive divisors need a map over F_p[t]")
    out = []
    for block, m in primitive_blocks(orbit, n):
        out.extend((g, m) for g, _ in factor(block).factors)
    out.sort(key=lambda gm: (gm[0].sort_key(), gm[1]))
    return out


@dataclass
class ZsigmondyEntry:
    n: int
    vanishing: bool
    blocks: list[tuple] = field(default_factory=list)

    @property
    def member(self) -> bool:
        return all(m % 2 == 0 for _, m in self.blocks)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vanishing": self.vanishing,
            "member": self.member,
            "primitive": [
                {
                    "degree": b.degree(),
                    "mult": m,
                    "poly": str(b) if b.degree() <= POLY_TEXT_CAP else None,
                }
                for b, m in self.blocks
            ],
        }


@dataclass
class ZsigmondyReport:
    map: QuadMap
    scanned_up_to: int
    per_n: list[ZsigmondyEntry]

    @property
    def members(self) -> list[int]:
        return [e.n for e in self.per_n if e.member]

    @property
    def vanishing(self) -> list[int]:
        return [e.n for e in self.per_n if e.vanishing]

    def to_json(self) -> dict:
        return {
            "map": str(self.map),
            "ring": self.map.ring_name(),
            "scanned_up_to": self.scanned_up_to,
            "members": self.members,
            "vanishing": self.vanishing,
            "per_n": [e.to_json() for e in self.per_n],
        }


def zsigmondy_set(phi: QuadMap, depth: int) -> ZsigmondyReport:
    """Z_s(phi) intersected with [1, depth], over F_p[t] or (char 0) over Z[t].

    A vanishing c_n is recorded as a member (it has no squarefree divisor at
    all) and is skipped as a comparison index for later n.
    """
    if phi.c1.is_zero():
        raise DegenerateSquare("c1 = 0")
    if depth < 1:
        raise PreconditionError("depth must be at least 1")
    orbit = adjusted_orbit(phi, depth)
    entries = []
    for n in range(1, depth + 1):
        if orbit.c[n].is_zero():
            entries.append(ZsigmondyEntry(n, True))
        else:
            entries.append(ZsigmondyEntry(n, False, primitive_blocks(orbit, n)))
    return ZsigmondyReport(phi, depth, entries)


# bound constants -------------------------------------------------------------

@dataclass(frozen=True)
class BoundConstants:
    e: int
    A: int
    B: int
    n0: int
    singular: bool
    ingredients: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {"e": self.e, "A": self.A, "B": self.B, "n0": self.n0, "singular": self.singular,
                "ingredients": dict(self.ingredients)}


def _regular_n0(prof: HeightProfile) -> int:
    n = 3
    while prof.h_gc * 2 ** (n - 3) <= prof.h_phi:
        n += 1
    return n


def _regular(pe: int, e: int, prof: HeightProfile, h_d1: int, h_rad_c1: int, h_rad_c2: int) -> BoundConstants:
    A = 8 * pe
    B = 8 * pe * (h_d1 + 4 + 4 * h_rad_c1 + 4 * h_rad_c2) + 4 * prof.h_gamma + 8 * prof.h_c1
    ingredients = {"p^e": pe, "h(d1)": h_d1, "h(rad c1)": h_rad_c1, "h(rad c2)": h_rad_c2,
                   "h(gamma)": prof.h_gamma, "h(c1)": prof.h_c1}
    return BoundConstants(e, A, B, _regular_n0(prof), False, ingredients)


def _singular(pe: int, e: int, prof: HeightProfile, h_dt1: int, h_rad_c1: int, h_rad_s2: int) -> BoundConstants:
    A = 8 * pe
    B = 8 * pe * (h_dt1 + 4 + 4 * h_rad_c1 + 4 * h_rad_s2) + 10 * prof.h_c1
    ingredients = {"p^e": pe, "h(d~1)": h_dt1, "h(rad c1)": h_rad_c1, "h(rad(sqrt c1 + 2))": h_rad_s2,
                   "h(c1)": prof.h_c1}
    return BoundConstants(e, A, B, 4, True, ingredients)


def _require_bound_pre(phi: QuadMap):
    if phi.c1.is_zero():
        raise IllDefined("c1 = 0")
    if is_isotrivial(phi):
        raise IllDefined("the map is isotrivial")


def bound_constants(phi: QuadMap) -> BoundConstants:
    """(e, A, B, n0) for a map over F_p[t], or with e = 0 and char-0 heights over Z[t]."""
    _require_bound_pre(phi)
    if phi.over_integers:
        return _bound_constants_char0(phi)
    rep = insep_degree(phi)
    p = phi.p
    pe = p**rep.e
    prof = height_profile(phi)
    if rep.singular.is_singular:
        root = sqrt_c1(phi.c1)
        s = root.poly()
        return _singular(pe, rep.e, prof,
                         height(squarefree_part_geometric(root.monic)),
                         height(radical(phi.c1)),
                         height(radical(s + 2)))
    c2 = adjusted_orbit(phi, 2).c[2]
    return _regular(pe, rep.e, prof,
                    height(squarefree_part_geometric(phi.c1)),
                    height(radical(phi.c1)),
                    height(radical(c2)) if not c2.is_zero() else 0)


def _square_data_z(c1: IntPoly):
    """(u, G) with c1 = u * G^2, G primitive in Z[t], or None if c1 is not a square over Q-bar."""
    _, parts = zx.squarefree_decomposition(c1)
    if any(m % 2 for _, m in parts):
        return None
    G = IntPoly.constant(1)
    for g, m in parts:
        G = G * g ** (m // 2)
    return c1.divmod_exact(G * G).lc(), G


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def singular_char0(phi: QuadMap) -> int | None:
    """eta with gamma = -c1 - eta * sqrt(c1) over Q-bar, or None."""
    data = _square_data_z(phi.c1)
    if data is None:
        return None
    u, G = data
    s = _isqrt_exact(u)
    if s is None:
        return None
    for eta in (1, -1):
        if phi.gamma == -phi.c1 - G * (eta * s):
            return eta
    return None


def _bound_constants_char0(phi: QuadMap) -> BoundConstants:
    prof = height_profile(phi)
    eta = singular_char0(phi)
    rad = lambda f: zx.radical(f).degree()
    if eta is not None:
        u, G = _square_data_z(phi.c1)
        root = G * _isqrt_exact(u)
        return _singular(1, 0, prof, zx.squarefree_part(root).degree(), rad(phi.c1), rad(root + 2))
    c2 = adjusted_orbit(phi, 2).c[2]
    return _regular(1, 0, prof, zx.squarefree_part(phi.c1).degree(), rad(phi.c1),
                    rad(c2) if not c2.is_zero() else 0)


# the exclusion solver ----------------------------------------------------------

@dataclass(frozen=True)
class SolverRow:
    n: int
    lhs: int | None
    rhs: int | None
    status: str  # "excluded", "not_excluded", "retained"

    def to_json(self) -> dict:
        return {"n": self.n, "lhs": self.lhs, "rhs": self.rhs, "status": self.status}


@dataclass
class BoundResult:
    N: int
    rows: list[SolverRow]
    permanent_from: int
    inequality: str

    def row(self, n: int) -> SolverRow:
        return next(r for r in self.rows if r.n == n)

    def to_json(self) -> dict:
        return {"N": self.N, "inequality": self.inequality, "permanent_from": self.permanent_from,
                "ledger": [r.to_json() for r in self.rows]}


def solve_exclusion(lhs, rhs, start: int, L: Fraction, a: Fraction, b: Fraction,
                    inequality: str, cap: int = BOUND_CAP) -> BoundResult:
    """Largest n >= 1 not excluded by lhs(n) > rhs(n).

    lhs(n) returns a lower bound for the left side (None when unknown, which
    retains n); every n < start is retained. Permanence is certified at m
    once, for y = 2^floor(m/2), lhs(n) >= L * y^2 and rhs(n) <= a * y + b hold
    for all n >= m by construction, y >= a / (2L), and L y^2 > a y + b: the
    quadratic is then increasing in y, so exclusion persists.
    """
    rows = []
    last = 0
    for n in range(1, cap + 1):
        if n < start:
            rows.append(SolverRow(n, None, None, "retained"))
            last = n
            continue
        lo, hi = lhs(n), rhs(n)
        if lo is None:
            rows.append(SolverRow(n, None, hi, "retained"))
            last = n
            continue
        if lo > hi:
            rows.append(SolverRow(n, lo, hi, "excluded"))
        else:
            rows.append(SolverRow(n, lo, hi, "not_excluded"))
            last = n
        y = 2 ** (n // 2)
        if rows[-1].status == "excluded" and 2 * L * y >= a and L * y * y > a * y + b:
            return BoundResult(last, rows, n, inequality)
    raise CapExceeded(f"exclusion not certified permanent by n = {cap}")


def _c_upper(prof: HeightProfile, i: int) -> int:
    """Upper bound for h(c_i) from the height lemma."""
    if not prof.equal_case:
        return prof.h_c1 if i == 1 else 2 ** (i - 1) * prof.h_phi
    if prof.beyond_kappa(i):
        return 2 ** (i - 1) * prof.h_gc
    return prof.h_gamma


def _c_lower(prof: HeightProfile, i: int) -> int | None:
    """Exact h(c_i) where the height lemma determines it, else None."""
    if i < 1:
        return None
    return prof.predicted_c_degree(i)


def _crit_upper(prof: HeightProfile, i: int) -> int:
    return 2**i * (prof.h_gamma if prof.equal_case else prof.h_phi)


def _asymptotics(prof: HeightProfile, gamma_zero: bool, A: int, B: int, shift: int):
    """L, a, b with lhs(n) >= L * 4^floor(n/2) and A * h-bound(d_n) + B <= a 2^floor(n/2) + b."""
    # every per-index bound is at most K * 2^i
    K = Fraction(0)
    for i in range(1, BOUND_CAP + 1):
        term = _c_upper(prof, i) + (0 if gamma_zero else _crit_upper(prof, i))
        K = max(K, Fraction(term, 2**i))
    # sum_{i<=m} K 2^i <= 2K * 2^m
    a = 2 * K * A
    # lhs(n) = 2^(n-1-shift) * scale for large n, and 2^n >= 4^floor(n/2)
    scale = prof.h_phi if not prof.equal_case else prof.h_gc
    L = Fraction(scale, 2 ** (1 + shift))
    return L, a, Fraction(B)


def effective_bound(phi: QuadMap, constants: BoundConstants | None = None) -> BoundResult:
    """Largest n that the height inequality fails to exclude from Z_s(phi).

    Regular case: h(c_{n-1}) <= A h(d_n) + B for n >= n0; singular case uses
    h(c_{n-2}). Here h(d_n) is bounded by the sum over i <= floor(n/2) of
    h(c_i) + h(phi^i(0)), dropping the second term when gamma = 0, and the
    heights come from the height lemma.
    """
    k = bound_constants(phi) if constants is None else constants
    prof = height_profile(phi)
    gamma_zero = phi.gamma.is_zero()
    shift = 2 if k.singular else 1

    def h_dn(n):
        total = 0
        for i in range(1, n // 2 + 1):
            total += _c_upper(prof, i)
            if not gamma_zero:
                total += _crit_upper(prof, i)
        return total

    def lhs(n):
        return _c_lower(prof, n - shift)

    def rhs(n):
        return k.A * h_dn(n) + k.B

    L, a, b = _asymptotics(prof, gamma_zero, k.A, k.B, shift)
    target = f"h(c_(n-{shift}))"
    term = "h(c_i)" if gamma_zero else "h(c_i)+h(phi^i(0))"
    text = f"{target} <= {k.A}*sum_(i<=floor(n/2)) {term} + {k.B}"
    return solve_exclusion(lhs, rhs, k.n0, L, a, b, text)


def uniform_bound(pe: int = 1) -> BoundResult:
    """Generic solver for 2^(n-2) <= 8 p^e (3 * 2^floor(n/2) - 3) + 136 p^e + 12, n >= 3."""
    lhs = lambda n: 2 ** (n - 2)
    rhs = lambda n: 8 * pe * (3 * 2 ** (n // 2) - 3) + 136 * pe + 12
    text = f"2^(n-2) <= {8 * pe}*(3*2^floor(n/2)-3)+{136 * pe}+12"
    return solve_exclusion(lhs, rhs, 3, Fraction(1, 4), Fraction(24 * pe), Fraction(112 * pe + 12), text)


# exceptional primes and the global bound ------------------------------------------

@dataclass
class ExceptionalPrimes:
    T: dict[int, list[str]]
    S: dict[int, list[str]]
    candidates_checked: list[int]

    def to_json(self) -> dict:
        return {
            "T": [{"p": p, "reasons": r} for p, r in sorted(self.T.items())],
            "S": [{"p": p, "reasons": r} for p, r in sorted(self.S.items())],
            "candidates_checked": self.candidates_checked,
        }


def _odd_prime_divisors(n: int) -> list[int]:
    n = abs(n)
    if n <= 1:
        return []
    fac = factor_integer(n)
    if not fac.complete:
        raise PreconditionError(f"could not factor {n} completely")
    return fac.odd_primes()


def _content_nonconstant(f: IntPoly) -> int:
    from math import gcd as igcd

    out = 0
    for v in f.coeffs[1:]:
        out = igcd(out, v)
    return out


def _char0_case(phi: QuadMap) -> str:
    data = _square_data_z(phi.c1)
    if data is None:
        return InsepCase.NON_SQUARE_C1.value
    u, G = data
    N = phi.gamma + G * G * u
    # the branch function (gamma + u G^2) / G is constant iff G divides N with constant quotient
    if N.is_zero() or (G.divides(N) and N.divmod_exact(G).degree() <= 0):
        return InsepCase.SQUARE_C1_CONST_EXPR.value
    return InsepCase.SQUARE_C1_NONCONST_EXPR.value


def exceptional_primes(phi: QuadMap) -> ExceptionalPrimes:
    """T (bad reduction) and a certified superset S of the primes with e_p > 0 or dropping heights.

    Candidates for e_p > 0 and for changes of branch come from contents of
    derivative cross terms, discriminants, and a scan of small primes; each
    candidate outside T is then settled by computing mod p.
    """
    if not phi.over_integers:
        raise PreconditionError("exceptional primes need a map over Z[t]")
    _require_bound_pre(phi)
    T: dict[int, list[str]] = {}
    S: dict[int, list[str]] = {}

    def tag(d, p, reason):
        d.setdefault(p, [])
        if reason not in d[p]:
            d[p].append(reason)

    gc = phi.gamma + phi.c1
    for p in _odd_prime_divisors(phi.c1.content()):
        tag(T, p, "c1 = 0 mod p")
    for p in _odd_prime_divisors(_content_nonconstant(gc)):
        tag(T, p, "isotrivial mod p")
    for p in T:
        for r in T[p]:
            tag(S, p, r)
    for name, f in (("gamma", phi.gamma), ("c1", phi.c1), ("gamma+c1", gc)):
        if f.degree() > 0:
            for p in _odd_prime_divisors(f.lc()):
                tag(S, p, f"lc({name}) = 0 mod p")

    c1 = phi.c1
    c2 = adjusted_orbit(phi, 2).c[2]
    candidates: set[int] = set()
    cross = c2.derivative() * c1 - c1.derivative() * c2
    if not cross.is_zero():
        candidates.update(_odd_prime_divisors(cross.content()))
    if c1.degree() > 0:
        candidates.update(_odd_prime_divisors(c1.derivative().content()))
    d1 = zx.squarefree_part(c1)
    if d1.degree() >= 2:
        candidates.update(_odd_prime_divisors(zx.discriminant(d1)))
    if d1.degree() >= 1:
        candidates.update(_odd_prime_divisors(d1.lc()))
    data = _square_data_z(c1)
    if data is not None:
        u, G = data
        N = phi.gamma + G * G * u
        rcross = N.derivative() * G - G.derivative() * N
        if not rcross.is_zero():
            candidates.update(_odd_prime_divisors(rcross.content()))
        sing = gc * gc - G * G * u
        if not sing.is_zero():
            candidates.update(_odd_prime_divisors(sing.content()))
    # a nonconstant p-th power has degree >= p
    deg_bound = 2 * max(c2.degree(), c1.degree(), phi.gamma.degree(), 1)
    candidates.update(q for q in primes_below(deg_bound + 1) if q > 2)

    base_case = _char0_case(phi)
    base_eta = singular_char0(phi)
    checked = []
    for q in sorted(candidates):
        if q in T:
            continue
        checked.append(q)
        red = phi.reduce(q)
        rep = insep_degree(red)
        if rep.e > 0:
            tag(S, q, f"inseparability degree {rep.e} mod p")
        if rep.case.value != base_case:
            tag(S, q, f"branch {base_case} -> {rep.case.value} mod p")
        if rep.singular.eta != base_eta:
            tag(S, q, "singular configuration changes mod p")
    return ExceptionalPrimes(T, S, checked)


@dataclass
class GlobalBound:
    N_phi: int
    N_generic: int
    generic: BoundResult
    constants: BoundConstants
    exceptional: ExceptionalPrimes
    per_prime: list[dict]
    stated_value: int | None = None

    def to_json(self) -> dict:
        return {
            "N_phi": self.N_phi,
            "N_generic": self.N_generic,
            "constants": self.constants.to_json(),
            "generic": self.generic.to_json(),
            "exceptional": self.exceptional.to_json(),
            "per_prime": self.per_prime,
            "stated_value": self.stated_value,
        }


def global_bound(phi: QuadMap) -> GlobalBound:
    """N_phi = max(N, N_q for q in S \\ T), with N computed from char-0 heights and e = 0.

    For p outside S the reduced constants can only shrink (radicals and
    squarefree parts lose degree mod p), so N dominates every such N_p.
    """
    if not phi.over_integers:
        raise PreconditionError("global bound needs a map over Z[t]")
    consts = bound_constants(phi)
    generic = effective_bound(phi, consts)
    exc = exceptional_primes(phi)
    per_prime = []
    best = generic.N
    for q in sorted(set(exc.S) - set(exc.T)):
        red = phi.reduce(q)
        k = bound_constants(red)
        res = effective_bound(red, k)
        per_prime.append({"q": q, "reasons": exc.S[q], "constants": k.to_json(), "N_q": res.N,
                          "ledger": [r.to_json() for r in res.rows]})
        best = max(best, res.N)
    return GlobalBound(best, generic.N, generic, consts, exc, per_prime, STATED_VALUES.get(phi))
