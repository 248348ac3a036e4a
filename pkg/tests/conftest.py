import itertools
import random

import pytest
from hypothesis import HealthCheck, settings

from arbordyn.fields import prime_field
from arbordyn.polyalg import Poly

settings.register_profile("ci", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")


def P(coeffs, p):
    """Poly over F_p from ascending integer coefficients."""
    return Poly.from_ints(coeffs, prime_field(p))


def all_monic(p, degree):
    desc = prime_field(p)
    for tail in itertools.product(range(p), repeat=degree):
        yield Poly.from_ints(list(tail) + [1], desc)


ACCEPTANCE: dict[int, str] = {}


def record(n: int, title: str, ok: bool, detail: str):
    ACCEPTANCE[n] = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])


@pytest.fixture
def rng():
    return random.Random(20261018)
