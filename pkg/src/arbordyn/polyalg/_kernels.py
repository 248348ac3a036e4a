"""Compiled inner loops for F_p arithmetic on int64 coefficient arrays (p < 2^31).

Used when numba is importable; callers fall back to vectorized numpy otherwise.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    njit = None

AVAILABLE = njit is not None

if AVAILABLE:

    @njit(cache=True)
    def inv_mod(a, p):
        t, new_t, r, new_r = 0, 1, p, a % p
        while new_r:
            q = r // new_r
            t, new_t = new_t, t - q * new_t
            r, new_r = new_r, r - q * new_r
        return t % p

    @njit(cache=True, inline="always")
    def submul_mod(r, s, b, p, pinv):
        """(r - s*b) mod p for residues r, s, b, using a float quotient estimate."""
        x = r - s * b
        q = np.int64(np.float64(x) * pinv)
        x -= q * p
        while x < 0:
            x += p
        while x >= p:
            x -= p
        return x

    @njit(cache=True)
    def _trim_len(a, n):
        while n > 0 and a[n - 1] == 0:
            n -= 1
        return n

    @njit(cache=True)
    def rem_inplace(r, nr, b, nb, p):
        """Reduce r[:nr] modulo monic-normalized copy of b[:nb]; return new length."""
        db = nb - 1
        inv = inv_mod(b[db], p)
        pinv = 1.0 / p
        for i in range(nr - 1, db - 1, -1):
            s = r[i] * inv % p
            if s:
                base = i - db
                for j in range(db):
                    r[base + j] = submul_mod(r[base + j], s, b[j], p, pinv)
                r[i] = 0
        n = min(nr, db)
        return _trim_len(r, n)

    @njit(cache=True)
    def divmod_k1(a, b, p):
        na, nb = a.shape[0], b.shape[0]
        db = nb - 1
        r = a.copy()
        if na <= db:
            return np.zeros(0, np.int64), r
        q = np.zeros(na - db, np.int64)
        inv = inv_mod(b[db], p)
        pinv = 1.0 / p
        for i in range(na - 1, db - 1, -1):
            s = r[i] * inv % p
            if s:
                q[i - db] = s
                base = i - db
                for j in range(db):
                    r[base + j] = submul_mod(r[base + j], s, b[j], p, pinv)
                r[i] = 0
        return q, r[: _trim_len(r, db)]

    @njit(cache=True)
    def gcd_k1(a, b, p):
        """Monic gcd of trimmed residue arrays."""
        x = a.copy()
        y = b.copy()
        nx, ny = x.shape[0], y.shape[0]
        if nx < ny:
            x, y = y, x
            nx, ny = ny, nx
        while ny > 0:
            nx = rem_inplace(x, nx, y, ny, p)
            x, y = y, x
            nx, ny = ny, nx
        out = x[:nx].copy()
        if nx:
            inv = inv_mod(out[nx - 1], p)
            for i in range(nx):
                out[i] = out[i] * inv % p
        return out

    @njit(cache=True)
    def resultant_k1(a, b, p):
        """Res(a, b) over F_p for nonzero trimmed arrays (convention lc(a)^deg b prod b(roots))."""
        x = a.copy()
        y = b.copy()
        nx, ny = x.shape[0], y.shape[0]
        res = 1
        while True:
            da, db = nx - 1, ny - 1
            if db == 0:
                lcv = y[0] % p
                acc = 1
                for _ in range(da):
                    acc = acc * lcv % p
                return res * acc % p
            lcb = y[db]
            nr = rem_inplace(x, nx, y, ny, p)
            if nr == 0:
                return 0
            dr = nr - 1
            if da % 2 == 1 and db % 2 == 1:
                res = (p - res) % p
            for _ in range(da - dr):
                res = res * lcb % p
            x, y = y, x
            nx, ny = ny, nr
