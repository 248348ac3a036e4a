"""Arboreal dynamics of quadratic maps (x - gamma)^2 - c1 over F_p[t] and Z[t]."""

from .errors import (
    ArbordynError,
    CapExceeded,
    DegenerateSquare,
    IllDefined,
    IteratesInseparable,
    ParseError,
    PreconditionError,
)
from .fields import prime_field, quadratic_extension
from .galois import (
    Mode,
    geometric_stability_certificate,
    jones_verify,
    mason_stothers_check,
    stoll_rank,
)
from .insep import InsepCase, insep_degree
from .orbit import (
    QuadMap,
    adjusted_orbit,
    discriminant_recursion_check,
    format_map,
    height_profile,
    is_isotrivial,
    iterate,
    orbit_period,
    parse_map,
)
from .polyalg import IntPoly, Poly
from .zsig import (
    bound_constants,
    effective_bound,
    exceptional_primes,
    global_bound,
    uniform_bound,
    zsigmondy_set,
)

__version__ = "0.1.0"

__all__ = [
    "ArbordynError", "CapExceeded", "DegenerateSquare", "IllDefined", "InsepCase", "IntPoly",
    "IteratesInseparable", "Mode", "ParseError", "Poly", "PreconditionError", "QuadMap",
    "adjusted_orbit", "bound_constants", "discriminant_recursion_check", "effective_bound",
    "exceptional_primes", "format_map", "geometric_stability_certificate", "global_bound",
    "height_profile", "insep_degree", "is_isotrivial", "iterate", "jones_verify",
    "mason_stothers_check", "orbit_period", "parse_map", "prime_field", "quadratic_extension",
    "uniform_bound", "stoll_rank", "zsigmondy_set",
]
