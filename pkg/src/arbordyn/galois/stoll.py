"""Square classes of the adjusted post-critical orbit and the F_2-rank criterion.

The support of the classes is a gcd-free (pairwise coprime) basis of the
odd-multiplicity parts of c_1..c_n. Every irreducible lies in exactly one
basis element, and each basis element either divides an odd part or is
coprime to it, so the parity matrix over this basis has the same rank as
the one over irreducibles, without factoring anything.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass, field

from ..errors import DegenerateSquare, IteratesInseparable, PreconditionError
from ..gf2 import pack, prefix_ranks
from ..ntheory import factor_integer
from ..orbit import QuadMap, adjusted_orbit
from ..polyalg import IntPoly, factor, gcd, squarefree_part_geometric
from ..polyalg import intpoly as zx

LABEL_CAP = 32


class Mode(str, enum.Enum):
    GEOMETRIC = "geometric"
    ARITHMETIC = "arithmetic"


def _gcd(a, b):
    return zx.gcd(a, b) if isinstance(a, IntPoly) else gcd(a, b)


def _div(a, b):
    return a.divmod_exact(b) if isinstance(a, IntPoly) else a.exact_div(b)


def _divides(b, a) -> bool:
    return b.divides(a)


def _key(f):
    if isinstance(f, IntPoly):
        return (f.degree(), f.coeffs[::-1])
    return f.sort_key()


def coprime_refine(basis: list, f) -> list:
    """Refine a pairwise coprime list of squarefree polynomials by squarefree f."""
    out = []
    for b in basis:
        if f.degree() <= 0:
            out.append(b)
            continue
        g = _gcd(b, f)
        if g.degree() <= 0:
            out.append(b)
            continue
        out.append(g)
        rest = _div(b, g)
        if rest.degree() > 0:
            out.append(rest)
        f = _div(f, g)
    if f.degree() > 0:
        out.append(f)
    return out


def coprime_basis(polys) -> list:
    basis = []
    for f in polys:
        basis = coprime_refine(basis, f)
    basis.sort(key=_key)
    return basis


def odd_part(f):
    """Squarefree part: monic over F_q, primitive with positive lc over Z."""
    if isinstance(f, IntPoly):
        return zx.squarefree_part(f)
    return squarefree_part_geometric(f)


def label(f) -> str:
    s = str(f)
    if f.degree() <= LABEL_CAP:
        return s
    return f"deg{f.degree()}:{hashlib.sha256(s.encode()).hexdigest()[:12]}"


def _unit_classes_z(values: list[IntPoly]) -> tuple[list[str], list[list[int]]]:
    """Columns for Q^x / squares: the sign and each prime with odd exponent in some unit."""
    units = [zx.squarefree_decomposition(v)[0] for v in values]
    primes = set()
    odd = []
    for u in units:
        fac = factor_integer(u)
        if not fac.complete:
            raise PreconditionError(f"could not factor the unit {u}")
        o = {p for p, e in fac.primes.items() if e % 2}
        odd.append(o)
        primes |= o
    labels = ["unit:-1"] + [f"unit:{p}" for p in sorted(primes)]
    rows = []
    for u, o in zip(units, odd):
        rows.append([1 if u < 0 else 0] + [1 if p in o else 0 for p in sorted(primes)])
    return labels, rows


@dataclass
class StollReport:
    depth: int
    mode: Mode
    ring: str
    base: list[str]
    rows: list[int]
    rank: int
    prefix_ranks: list[int]
    support: str = "coprime"
    extra: dict = field(default_factory=dict)

    @property
    def surjective_up_to(self) -> int:
        m = 0
        for i, r in enumerate(self.prefix_ranks, start=1):
            if r != i:
                break
            m = i
        return m

    def matrix_strings(self) -> list[str]:
        w = len(self.base)
        return ["".join(str((r >> j) & 1) for j in range(w)) for r in self.rows]

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "mode": self.mode.value,
            "ring": self.ring,
            "support": self.support,
            "base": self.base,
            "parity_matrix": self.matrix_strings(),
            "rank": self.rank,
            "prefix_ranks": self.prefix_ranks,
            "surjective_up_to": self.surjective_up_to,
        }


def class_matrix(values: list, mode: Mode | str = Mode.GEOMETRIC,
                 support: str = "coprime") -> tuple[list[str], list[int]]:
    """Base labels and packed parity rows for nonzero values in F_q[t] or Z[t]."""
    mode = Mode(mode)
    over_z = isinstance(values[0], IntPoly)
    odds = [odd_part(v) for v in values]
    if support == "irreducible":
        if over_z:
            raise PreconditionError("irreducible support is only available over F_p")
        seen = {}
        for d in odds:
            if d.degree() > 0:
                for g, _ in factor(d).factors:
                    seen[g] = g
        basis = sorted(seen.values(), key=_key)
    elif support == "coprime":
        basis = coprime_basis([d for d in odds if d.degree() > 0])
    else:
        raise PreconditionError(f"unknown support {support!r}")

    labels = [label(b) for b in basis]
    bit_rows = [[1 if _divides(b, d) else 0 for b in basis] for d in odds]
    if mode is Mode.ARITHMETIC:
        if over_z:
            ulabels, urows = _unit_classes_z(values)
        else:
            ulabels = ["unit"]
            urows = [[0 if v.lc().is_square() else 1] for v in values]
        labels = ulabels + labels
        bit_rows = [u + r for u, r in zip(urows, bit_rows)]
    return labels, [pack(r) for r in bit_rows]


def stoll_rank(phi: QuadMap, depth: int, mode: Mode | str = Mode.GEOMETRIC,
               support: str = "coprime") -> StollReport:
    """F_2-rank of the classes of c_1..c_depth in k(t)^x / squares.

    Geometric mode ignores constants (squares over the closure); Arithmetic
    mode adds unit coordinates: the quadratic character of lc over F_q, or
    sign and odd-exponent primes of the content over Q. support="irreducible"
    factors the odd parts completely (F_q only) as a cross-check.
    """
    mode = Mode(mode)
    if depth < 1:
        raise PreconditionError("depth must be at least 1")
    if phi.c1.is_zero():
        raise DegenerateSquare("c1 = 0")
    c = adjusted_orbit(phi, depth).c[1 : depth + 1]
    for i, v in enumerate(c, start=1):
        if v.is_zero():
            raise IteratesInseparable(f"c_{i} = 0")
    labels, rows = class_matrix(c, mode, support)
    prefix = prefix_ranks(rows)
    return StollReport(depth, mode, phi.ring_name(), labels, rows, prefix[-1], prefix, support)


def subset_is_square(report: StollReport, subset) -> bool:
    """True iff the rows indexed by subset (1-based) sum to zero over F_2."""
    acc = 0
    for i in subset:
        acc ^= report.rows[i - 1]
    return acc == 0


def geometric_stability_certificate(phi: QuadMap, depth: int) -> dict:
    """CertifiedStable when the geometric classes of c_1..c_depth are independent.

    Full rank gives the maximal geometric Galois group at every level up to
    depth; that group acts transitively on the roots, so the iterates are
    irreducible. A deficient rank proves nothing, hence Unknown.
    """
    rep = stoll_rank(phi, depth, Mode.GEOMETRIC)
    if rep.surjective_up_to == depth:
        return {"status": "CertifiedStable", "depth": depth}
    return {"status": "Unknown", "depth": depth, "surjective_up_to": rep.surjective_up_to}
