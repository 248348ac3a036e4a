"""Square classes, the Mason-Stothers checker and the Jones pipeline."""

from .abc import MasonStothersReport, mason_stothers_check, place_count, random_triple
from .jones import JonesReport, SubsetRecord, jones_verify
from .stoll import (
    Mode,
    StollReport,
    class_matrix,
    coprime_basis,
    geometric_stability_certificate,
    stoll_rank,
    subset_is_square,
)

__all__ = [
    "JonesReport",
    "MasonStothersReport",
    "Mode",
    "StollReport",
    "SubsetRecord",
    "class_matrix",
    "coprime_basis",
    "geometric_stability_certificate",
    "jones_verify",
    "mason_stothers_check",
    "place_count",
    "random_triple",
    "stoll_rank",
    "subset_is_square",
]
