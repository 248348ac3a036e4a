"""Resultants in R[x] for R = Z[t] or F_q[t], by the subresultant PRS.

Polynomials in x are ascending lists of ring elements. Every division in the
PRS is exact in R, so no fractions appear.
"""

from __future__ import annotations

from .intpoly import IntPoly


def _trim(f: list) -> list:
    f = list(f)
    while f and f[-1].is_zero():
        f.pop()
    return f


def _deg(f: list) -> int:
    return len(f) - 1


def _exact(a, b):
    if isinstance(a, IntPoly):
        return a.divmod_exact(b)
    return a.exact_div(b)


def rx_derivative(f: list) -> list:
    return _trim([f[i] * i for i in range(1, len(f))])


def rx_pseudo_rem(a: list, b: list) -> list:
    """lc(b)^(deg a - deg b + 1) * a mod b."""
    a, b = _trim(a), _trim(b)
    db = _deg(b)
    lcb = b[-1]
    delta = _deg(a) - db + 1
    r = list(a)
    while r and _deg(r) >= db:
        lead = r[-1]
        shift = _deg(r) - db
        r = [c * lcb for c in r]
        for i in range(db + 1):
            r[shift + i] = r[shift + i] - lead * b[i]
        r = _trim(r[:-1])
        delta -= 1
    if delta > 0:
        factor = lcb**delta
        r = [c * factor for c in r]
    return r


def rx_resultant(a: list, b: list):
    """Res_x(a, b) with the Sylvester-matrix convention."""
    a, b = _trim(a), _trim(b)
    if not a or not b:
        raise ValueError("resultant with the zero polynomial")
    one = a[-1] - a[-1] + 1
    zero = one - 1
    s = 1
    if _deg(a) < _deg(b):
        a, b = b, a
        if _deg(a) % 2 and _deg(b) % 2:
            s = -s
    if _deg(b) == 0:
        return b[0] ** _deg(a) * s
    g = h = one
    while True:
        delta = _deg(a) - _deg(b)
        if _deg(a) % 2 and _deg(b) % 2:
            s = -s
        r = rx_pseudo_rem(a, b)
        a = b
        if not r:
            return zero
        denom = g * h**delta
        b = [_exact(c, denom) for c in r]
        g = a[-1]
        h = _exact(g**delta, h ** (delta - 1)) if delta >= 1 else h
        if _deg(b) == 0:
            break
    da = _deg(a)
    lb = b[0]
    value = _exact(lb**da, h ** (da - 1)) if da >= 1 else one
    return value * s


def rx_discriminant(f: list):
    """disc_x(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f)."""
    f = _trim(f)
    d = _deg(f)
    if d < 1:
        raise ValueError("discriminant of a constant")
    fp = rx_derivative(f)
    if not fp:
        return f[-1] - f[-1]
    r = rx_resultant(f, fp)
    # formal degree of f' is d - 1; correct when it drops (char p)
    missing = d - 1 - _deg(fp)
    if missing:
        r = r * f[-1] ** missing
    if (d * (d - 1) // 2) % 2:
        r = -r
    return _exact(r, f[-1])
