"""Command-line front end: `arbordyn VERB [MAP] [options]`.

Reports go to stdout (or --out) as JSON. Exit codes: 0 success, 1 bad
arguments or unparseable input, 2 precondition violation, 3 verification
finished but incomplete.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from dataclasses import dataclass
from importlib import resources

import jsonschema

from .errors import ArbordynError, ParseError
from .fields import prime_field
from .galois.abc import mason_stothers_check, random_triple
from .galois.jones import jones_verify
from .galois.stoll import Mode, geometric_stability_certificate, stoll_rank
from .insep import insep_degree
from .ntheory import ECM_STAGES, is_prime
from .orbit import adjusted_orbit, height_profile, is_isotrivial, orbit_period, parse_map
from .polyalg import Poly
from .polyalg.text import parse_int_coeffs
from .zsig import bound_constants, effective_bound, global_bound, zsigmondy_set

SCHEMA_VERSION = "1"
VERBS = ("orbit", "insep", "zsig", "bound", "global-bound", "stoll", "jones", "ms-check")
DEFAULT_DEPTH = {"orbit": 4, "zsig": 8, "stoll": 8, "jones": 3}
EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_INCOMPLETE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arbordyn", description="Arboreal dynamics of quadratic maps over F_p[t] and Z[t].")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("args", nargs="*", help="the map text (ms-check: two polynomials a and b)")
    p.add_argument("--mod", type=int, help="work over F_p[t]; omitted means Z[t]")
    p.add_argument("--depth", type=int)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="geometric")
    p.add_argument("--support", choices=["coprime", "irreducible"], default="coprime")
    p.add_argument("--prime-cap", type=int, default=2000, help="jones: scan every odd p up to this")
    p.add_argument("--factor-effort", type=int, default=200_000, help="Pollard-Brent iteration budget")
    p.add_argument("--ecm-stages", type=int, default=len(ECM_STAGES))
    p.add_argument("--checkpoint", help="jones: directory for per-subset checkpoints")
    p.add_argument("--count", type=int, default=1000, help="ms-check: random trials when no a, b given")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--json", action="store_true", help="accepted for compatibility; output is always JSON")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


@dataclass
class Outcome:
    payload: dict
    code: int = EXIT_OK


def _map(args):
    if len(args.args) != 1:
        raise UsageError(f"{args.verb} takes exactly one map argument")
    if args.mod is not None and not (args.mod > 2 and is_prime(args.mod)):
        raise UsageError(f"--mod {args.mod} is not an odd prime")
    return parse_map(args.args[0], args.mod)


def _depth(args) -> int:
    d = args.depth if args.depth is not None else DEFAULT_DEPTH[args.verb]
    if d < 1:
        raise UsageError("--depth must be positive")
    return d


def _head(phi) -> dict:
    return {"map": str(phi), "ring": phi.ring_name()}


def cmd_orbit(args) -> Outcome:
    phi, n = _map(args), _depth(args)
    orb = adjusted_orbit(phi, n)
    iso = is_isotrivial(phi)
    out = _head(phi) | {
        "depth": n,
        "orbit": [str(v) for v in orb.c[1 : n + 1]],
        "crit0": [str(v) for v in orb.crit0[1 : n + 1]],
        # kappa is undefined for isotrivial maps
        "heights": None if iso else height_profile(phi).to_json(),
        "isotrivial": iso,
    }
    if not phi.over_integers and iso:
        out["period"] = orbit_period(phi, 4 * phi.p).to_json()
    return Outcome(out)


def cmd_insep(args) -> Outcome:
    phi = _map(args)
    return Outcome(_head(phi) | insep_degree(phi).to_json())


def cmd_zsig(args) -> Outcome:
    phi = _map(args)
    return Outcome(zsigmondy_set(phi, _depth(args)).to_json())


def cmd_bound(args) -> Outcome:
    phi = _map(args)
    k = bound_constants(phi)
    return Outcome(_head(phi) | k.to_json() | {"solver": effective_bound(phi, k).to_json()})


def cmd_global_bound(args) -> Outcome:
    phi = _map(args)
    return Outcome({"map": str(phi)} | global_bound(phi).to_json())


def cmd_stoll(args) -> Outcome:
    phi, n = _map(args), _depth(args)
    rep = stoll_rank(phi, n, args.mode, support=args.support)
    cert = geometric_stability_certificate(phi, n)["status"]
    return Outcome({"map": str(phi)} | rep.to_json() | {"certificate": cert})


def cmd_jones(args) -> Outcome:
    if args.args:
        raise UsageError("jones runs on x^2+t and takes no map")
    rep = jones_verify(_depth(args), factor_effort=args.factor_effort, scan_cap=args.prime_cap,
                       jobs=args.jobs, checkpoint_dir=args.checkpoint, seed=args.seed,
                       ecm_stages=args.ecm_stages)
    return Outcome(rep.to_json(), EXIT_OK if rep.complete else EXIT_INCOMPLETE)


def cmd_ms_check(args) -> Outcome:
    if args.mod is None or not (args.mod > 2 and is_prime(args.mod)):
        raise UsageError("ms-check needs --mod p with p an odd prime")
    desc = prime_field(args.mod)
    if len(args.args) == 2:
        a, b = (Poly.from_ints(parse_int_coeffs(s), desc) for s in args.args)
        rep = mason_stothers_check(a, b)
        if not rep.checked:
            raise ArbordynError(rep.reason)
        checks = [{"a": str(a), "b": str(b)} | rep.to_json()]
        failures = 0 if rep.holds else 1
    elif not args.args:
        rng = random.Random(args.seed)
        checks, failures = [], 0
        for _ in range(args.count):
            a, b = random_triple(desc, rng)
            rep = mason_stothers_check(a, b)
            if not rep.holds:
                failures += 1
                checks.append({"a": str(a), "b": str(b)} | rep.to_json())
    else:
        raise UsageError("ms-check takes two polynomials a b, or none for random trials")
    return Outcome({"ring": f"F_{args.mod}[t]", "count": args.count if not args.args else 1,
                    "checks": checks, "failures": failures})


COMMANDS = {
    "orbit": cmd_orbit,
    "insep": cmd_insep,
    "zsig": cmd_zsig,
    "bound": cmd_bound,
    "global-bound": cmd_global_bound,
    "stoll": cmd_stoll,
    "jones": cmd_jones,
    "ms-check": cmd_ms_check,
}


def _input_echo(args) -> dict:
    keys = ("args", "mod", "depth", "mode", "support", "prime_cap", "factor_effort", "ecm_stages", "count", "seed")
    return {k: getattr(args, k) for k in keys}


def load_schema() -> dict:
    text = resources.files("arbordyn").joinpath("schema/report.schema.json").read_text()
    return json.loads(text)


@dataclass
class Validation:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def schema_validate(report: dict) -> Validation:
    """Check a report against the shipped schema; falsy with a reason otherwise."""
    version = report.get("schema_version") if isinstance(report, dict) else None
    if version != SCHEMA_VERSION:
        return Validation(False, f"schema version mismatch: report has {version!r}, expected {SCHEMA_VERSION!r}")
    try:
        jsonschema.validate(report, load_schema(), cls=jsonschema.Draft202012Validator)
    except jsonschema.ValidationError as exc:
        return Validation(False, exc.message)
    return Validation(True)


def render(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def run(argv=None) -> tuple[int, dict | None]:
    """Execute one command; returns (exit code, report or None on usage errors)."""
    parser = build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except UsageError as exc:
        sys.stderr.write(parser.format_usage() + f"arbordyn: error: {exc}\n")
        return EXIT_USAGE, None
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    base = {"schema_version": SCHEMA_VERSION, "command": args.verb, "input": _input_echo(args)}
    try:
        outcome = COMMANDS[args.verb](args)
    except (UsageError, ParseError) as exc:
        sys.stderr.write(parser.format_usage() + f"arbordyn: error: {exc}\n")
        return EXIT_USAGE, None
    except ArbordynError as exc:
        report = base | {"error": {"type": type(exc).__name__, "message": str(exc)}}
        _emit(report, args.out)
        return EXIT_PRECONDITION, report
    report = base | outcome.payload
    _emit(report, args.out)
    return outcome.code, report


def _emit(report: dict, path):
    text = render(report)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
