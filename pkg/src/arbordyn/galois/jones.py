"""Finite verification that x^2 + t stays geometrically surjective mod every odd prime.

For each nonempty I in {1..depth}, the product P_I of the orbit elements
c_i over Z[t] has a squarefree part d_I. A prime q can make P_I a square
mod q only if d_I picks up a repeated factor mod q (or drops degree), so
q divides disc(d_I) or lc(d_I). Every such odd q is tested directly. A
separate scan runs the rank criterion for all small odd primes and checks
that each deficiency, if any, is explained by a candidate.
"""

from __future__ import annotations

import hashlib
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from ..fields import prime_field
from ..ntheory import ECM_STAGES, factor_integer, primes_below
from ..orbit import QuadMap, adjusted_orbit
from ..polyalg import IntPoly, is_square_in_closure
from ..polyalg import intpoly as zx
from .stoll import Mode, stoll_rank

log = logging.getLogger(__name__)

NOT_A_SQUARE = "NotASquare"
IS_A_SQUARE = "IsASquare"
CHECKPOINT_VERSION = 1


def jones_map() -> QuadMap:
    return QuadMap.over_z([0], [0, -1])


def subsets(depth: int) -> list[tuple[int, ...]]:
    """Nonempty subsets of 1..depth, by size and then lexicographically."""
    out = []
    for k in range(1, depth + 1):
        out.extend(combinations(range(1, depth + 1), k))
    return out


def subset_key(depth: int, subset) -> str:
    return hashlib.sha256(f"{depth}:{list(subset)}".encode()).hexdigest()[:24]


def product(polys) -> IntPoly:
    out = IntPoly.constant(1)
    for f in polys:
        out = out * f
    return out


@dataclass
class SubsetRecord:
    subset: tuple[int, ...]
    deg_d: int
    disc: int
    factorization: dict
    candidate_primes: list[int]
    verdicts: dict[int, str] = field(default_factory=dict)

    @property
    def factored(self) -> bool:
        return not self.factorization["cofactors"]

    def disc_status(self) -> dict:
        if self.factored:
            return {"Computed": {"value": str(self.disc), "factors": self.factorization["primes"]}}
        return {"PartialFactorization": {"value": str(self.disc),
                                         "factors": self.factorization["primes"],
                                         "cofactors": self.factorization["cofactors"]}}

    def to_json(self) -> dict:
        return {
            "I": list(self.subset),
            "deg_d": self.deg_d,
            "disc_status": self.disc_status(),
            "candidate_primes": [str(q) for q in self.candidate_primes],
            "per_prime_verdicts": {str(q): v for q, v in sorted(self.verdicts.items())},
        }

    def to_checkpoint(self, depth: int) -> dict:
        return {
            "version": CHECKPOINT_VERSION,
            "depth": depth,
            "I": list(self.subset),
            "deg_d": self.deg_d,
            "disc": str(self.disc),
            "factorization": self.factorization,
            "candidate_primes": [str(q) for q in self.candidate_primes],
            "verdicts": {str(q): v for q, v in sorted(self.verdicts.items())},
        }

    @classmethod
    def from_checkpoint(cls, data: dict) -> SubsetRecord:
        return cls(tuple(data["I"]), data["deg_d"], int(data["disc"]), data["factorization"],
                   [int(q) for q in data["candidate_primes"]],
                   {int(q): v for q, v in data["verdicts"].items()})


@dataclass
class JonesReport:
    depth: int
    records: list[SubsetRecord]
    scan_cap: int
    scan_deficient: list[dict]
    params: dict

    @property
    def bad_primes_found(self) -> list[int]:
        return sorted({q for r in self.records for q, v in r.verdicts.items() if v != NOT_A_SQUARE})

    @property
    def complete(self) -> bool:
        return all(r.factored and set(r.verdicts) == set(r.candidate_primes) for r in self.records)

    @property
    def candidate_primes(self) -> list[int]:
        return sorted({q for r in self.records for q in r.candidate_primes})

    def record(self, subset) -> SubsetRecord:
        subset = tuple(subset)
        for r in self.records:
            if r.subset == subset:
                return r
        raise KeyError(subset)

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "subsets": [r.to_json() for r in self.records],
            "candidate_primes": [str(q) for q in self.candidate_primes],
            "bad_primes_found": [str(q) for q in self.bad_primes_found],
            "complete": self.complete,
            "scan": {"prime_cap": self.scan_cap, "deficient": self.scan_deficient},
            "params": self.params,
        }


def _disc_task(args):
    subset, c = args
    d = zx.squarefree_part(product(c[i - 1] for i in subset))
    disc = zx.discriminant(d) if d.degree() >= 1 else 1
    return d.degree(), d.lc(), disc


def _scan_task(args):
    p, depth = args
    rep = stoll_rank(jones_map().reduce(p), depth, Mode.GEOMETRIC)
    return p, rep.rank


def _map(fn, items, jobs):
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _load(path: Path, depth: int, subset) -> SubsetRecord | None:
    if not path.exists():
        return None
    data = json.loads(path.read_text())
    if data.get("version") != CHECKPOINT_VERSION or data["depth"] != depth or tuple(data["I"]) != tuple(subset):
        log.warning("ignoring stale checkpoint %s", path)
        return None
    return SubsetRecord.from_checkpoint(data)


def _save(path: Path, record: SubsetRecord, depth: int):
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(record.to_checkpoint(depth), sort_keys=True))
    tmp.replace(path)


def jones_verify(depth: int, factor_effort: int = 200_000, scan_cap: int = 2000, jobs: int = 1,
                 checkpoint_dir=None, seed: int = 0, ecm_stages: int = len(ECM_STAGES)) -> JonesReport:
    """Run the subset pipeline to the given depth plus the rank scan to scan_cap.

    Incompleteness (an unsplit cofactor) is recorded in the report rather
    than raised. With checkpoint_dir, finished subsets are stored one file
    each and reused on the next run.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    c = adjusted_orbit(jones_map(), depth).c[1 : depth + 1]
    order = subsets(depth)
    ckpt = Path(checkpoint_dir) if checkpoint_dir else None
    if ckpt:
        ckpt.mkdir(parents=True, exist_ok=True)

    loaded = {}
    for s in order:
        if ckpt:
            rec = _load(ckpt / f"{subset_key(depth, s)}.json", depth, s)
            if rec is not None:
                loaded[s] = rec
    todo = [s for s in order if s not in loaded]
    discs = dict(zip(todo, _map(_disc_task, [(s, c) for s in todo], jobs)))

    known: list[int] = []
    for rec in loaded.values():
        known.extend(int(p) for p, _ in rec.factorization["primes"])
    records = []
    for s in order:
        if s in loaded:
            records.append(loaded[s])
            continue
        deg, lc, disc = discs[s]
        fac = factor_integer(disc, effort=factor_effort, seed=seed, hints=sorted(set(known)),
                             ecm_stages=ecm_stages) if abs(disc) > 1 else None
        fjson = fac.to_json() if fac else {"n": str(disc), "primes": [], "cofactors": [], "complete": True}
        cands = set(fac.odd_primes()) if fac else set()
        if abs(lc) > 1:
            lf = factor_integer(lc, effort=factor_effort, seed=seed)
            cands |= set(lf.odd_primes())
        if fac:
            known.extend(fac.primes)
        rec = SubsetRecord(s, deg, disc, fjson, sorted(cands))
        prod = product(c[i - 1] for i in s)
        for q in rec.candidate_primes:
            square = is_square_in_closure(prod.reduce(prime_field(q)))
            rec.verdicts[q] = IS_A_SQUARE if square else NOT_A_SQUARE
        log.info("subset %s: deg d = %d, %d candidates", s, deg, len(cands))
        if ckpt:
            _save(ckpt / f"{subset_key(depth, s)}.json", rec, depth)
        records.append(rec)

    cand_all = {q for r in records for q in r.candidate_primes}
    scan = _map(_scan_task, [(p, depth) for p in primes_below(scan_cap + 1) if p > 2], jobs)
    deficient = [{"p": p, "rank": r, "explained": p in cand_all} for p, r in scan if r < depth]
    params = {"factor_effort": factor_effort, "seed": seed, "ecm_stages": ecm_stages}
    return JonesReport(depth, records, scan_cap, deficient, params)
