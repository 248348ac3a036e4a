"""Dynamical inseparability degree of (x - gamma)^2 - c1 over F_p[t].

Write sqrt(c1) = u * g with g the monic square root of c1 / lc(c1) and
u = sqrt(lc(c1)), possibly in F_{p^2}. Then

    gamma / sqrt(c1) + sqrt(c1) = (gamma + lc(c1) * g^2) / (u * g),

and since constants are p^i-th powers in the algebraic closure for every i,
the p-th power degree of the branch expression equals that of the F_p(t)
function R = (gamma + lc(c1) g^2) / g. All p-th root extraction therefore
happens over F_p, and the answer does not depend on the sign of u.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import IllDefined, PreconditionError
from .fields import FieldElem, sqrt_in_closure
from .orbit import QuadMap, adjusted_orbit, is_isotrivial
from .polyalg import Poly, RationalFn, is_square_in_closure, monic_square_root, pth_root_chain


class InsepCase(str, enum.Enum):
    NON_SQUARE_C1 = "NonSquareC1"
    SQUARE_C1_NONCONST_EXPR = "SquareC1NonConstExpr"
    SQUARE_C1_CONST_EXPR = "SquareC1ConstExpr"


@dataclass(frozen=True)
class Singular:
    """Result of the singular-configuration test; eta is None when not singular."""

    eta: int | None = None

    @property
    def is_singular(self) -> bool:
        return self.eta is not None

    def to_json(self):
        return "No" if self.eta is None else {"Yes": self.eta}

    def __str__(self):
        return "No" if self.eta is None else f"Yes({self.eta:+d})"


NOT_SINGULAR = Singular()


@dataclass(frozen=True)
class SqrtC1:
    """sqrt(c1) = unit * monic, unit possibly in F_{p^2}."""

    unit: FieldElem
    monic: Poly

    def poly(self) -> Poly:
        """The root as a polynomial over the unit's field."""
        return self.monic.to_extension(self.unit.desc).scale(self.unit) if self.unit.desc.k == 2 else self.monic.scale(self.unit)

    def __str__(self):
        if self.unit.desc.k == 1:
            return str(self.poly())
        return f"({self.unit})*({self.monic})"


def sqrt_c1(c1: Poly, negate: bool = False) -> SqrtC1 | None:
    """Canonical sqrt(c1) in the closure, or None if c1 is not a square there."""
    if c1.is_zero() or not is_square_in_closure(c1):
        return None
    u = sqrt_in_closure(c1.lc())
    return SqrtC1(-u if negate else u, monic_square_root(c1))


@dataclass
class InsepReport:
    e: int
    case: InsepCase
    singular: Singular
    expression: str
    chain: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "case": self.case.value,
            "singular": self.singular.to_json(),
            "witness": {"expression": self.expression, "pth_root_chain": self.chain},
        }


def _check(phi: QuadMap):
    if phi.over_integers:
        raise PreconditionError("inseparability degree needs a map over F_p[t]")
    if phi.c1.is_zero():
        raise IllDefined("c1 = 0")
    if is_isotrivial(phi):
        raise IllDefined("the map is isotrivial")


def detect_singular(phi: QuadMap) -> Singular:
    """Yes(eta) iff gamma = -c1 - eta * sqrt(c1) for the canonical root."""
    if phi.over_integers:
        raise PreconditionError("singular detection needs a map over F_p[t]")
    root = sqrt_c1(phi.c1)
    if root is None:
        return NOT_SINGULAR
    s = root.poly()
    ext = s.desc
    gamma, c1 = phi.gamma.to_extension(ext), phi.c1.to_extension(ext)
    for eta in (1, -1):
        if gamma == -c1 - s.scale(ext.elem(eta)):
            return Singular(eta)
    return NOT_SINGULAR


def branch_function(phi: QuadMap, root: SqrtC1) -> RationalFn:
    """R = (gamma + lc(c1) g^2) / g, equal to the branch expression times the unit u."""
    g = root.monic
    num = phi.gamma + g * g * phi.c1.lc()
    return RationalFn.make(num, g)


def _chain(f: RationalFn) -> list[RationalFn]:
    return pth_root_chain(f)


def insep_degree(phi: QuadMap, negate_root: bool = False) -> InsepReport:
    """The dynamical inseparability degree with its witness chain.

    negate_root swaps the canonical sqrt(c1) for its negative; the result
    is the same either way and tests use the flag to confirm it.
    """
    _check(phi)
    root = sqrt_c1(phi.c1, negate=negate_root)
    if root is None:
        c2 = adjusted_orbit(phi, 2).c[2]
        f = RationalFn.make(c2, phi.c1)
        chain = _chain(f)
        return InsepReport(len(chain) - 1, InsepCase.NON_SQUARE_C1, NOT_SINGULAR, f"({c2})/({phi.c1})",
                           [str(r) for r in chain])
    singular = detect_singular(phi)
    r = branch_function(phi, root)
    u = root.unit
    expr_text = f"({r})/({u})"
    if not r.is_constant():
        chain = _chain(r)
        return InsepReport(len(chain) - 1, InsepCase.SQUARE_C1_NONCONST_EXPR, singular, expr_text,
                           [str(x) for x in chain])
    chain = _chain(RationalFn.make(phi.c1, Poly.constant(1, phi.c1.desc)))
    return InsepReport(len(chain) - 1, InsepCase.SQUARE_C1_CONST_EXPR, singular, expr_text,
                       [str(x) for x in chain])
