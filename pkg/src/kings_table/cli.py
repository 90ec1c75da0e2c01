"""Command-line interface: ``kings-table <command> [options]``.

Every command writes one result document to stdout (JSON by default, or
an aligned text table with ``--format table``). Exit codes: 0 when a
result was computed, whatever the mathematical verdict; 2 for usage
errors; 3 when a request exceeds a size limit. Seat numbers in all output
are 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Sequence

from . import __version__
from .algebra import (build_king_poly, dyson_closed_form,
                      dyson_constant_term_bruteforce, DysonSpec)
from .certificate import certify, cross_check_expansion
from .errors import DomainError, ResourceError
from .explorer import survey
from .modring import is_prime
from .seating import (Instance, Seating, composite_counterexample, empty_seat,
                      orbit_decomposition, orbit_infeasibility_witness)
from .solver import SolverConfig, enumerate_all, solve

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3

# largest n for which --all enumeration is accepted
MAX_ENUMERATE_N = 6
# largest m for which counterexamples are confirmed by exhaustion
MAX_CONFIRM_M = 15


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _witness_payload(inst: Instance, s: Seating) -> dict:
    m = inst.m
    return {
        "positions": [x + 1 for x in s.positions],
        "couples": [[x + 1, (x + d) % m + 1] for x, d in zip(s.positions, inst.distances)],
        "empty_seat": empty_seat(inst, s) + 1,
    }


def _instance(m: int, distances: list[int]) -> Instance:
    if m < 3 or m % 2 == 0:
        raise UsageError(f"--m must be odd and >= 3, got {m}")
    n = (m - 1) // 2
    if len(distances) != n:
        raise UsageError(f"m={m} needs exactly {n} distances, got {len(distances)}")
    bad = [d for d in distances if not 1 <= d <= n]
    if bad:
        raise UsageError(f"distances must lie in [1, {n}], got {bad}")
    return Instance(distances)


def cmd_solve(args) -> dict:
    inst = _instance(args.m, args.distances)
    if args.all:
        if inst.n > MAX_ENUMERATE_N:
            raise ResourceError(f"--all is limited to n <= {MAX_ENUMERATE_N}, got n={inst.n}")
        enum = enumerate_all(inst, up_to_rotation=args.up_to_rotation)
        return {
            "instance": inst.to_dict(),
            "mode": "enumerate",
            "up_to_rotation": args.up_to_rotation,
            "count": enum.count,
            "seatings": [[x + 1 for x in s.positions] for s in enum.seatings],
        }
    cfg = SolverConfig(use_reflection_pruning=args.reflection, node_budget=args.budget)
    out = solve(inst, cfg)
    orbit = orbit_infeasibility_witness(inst)
    return {
        "instance": inst.to_dict(),
        "mode": "search",
        "verdict": out.verdict.value,
        "nodes_explored": out.nodes_explored,
        "witness": None if out.witness is None else _witness_payload(inst, out.witness),
        "orbit_witness": None if orbit is None else orbit.to_dict(),
    }


def cmd_certify(args) -> dict:
    p = args.p
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise UsageError(f"--p must be an odd prime, got {p}")
    n = (p - 1) // 2
    distances = args.distances if args.distances is not None else list(range(1, n + 1))
    inst = _instance(p, distances)
    if args.cross_check:
        cert = cross_check_expansion(p, inst.distances)
        if not cert.consistent:
            print(f"INCONSISTENT: expansion gives {cert.expansion_coeff.value}, "
                  f"closed form gives {cert.coeff_value.value}", file=sys.stderr)
    else:
        cert = certify(p)
    result = cert.to_dict()
    if args.dump_poly:
        result["poly_distances"] = list(inst.distances)
        result["poly_dump"] = build_king_poly(inst, p).dumps().splitlines()
    return result


def cmd_dyson(args) -> dict:
    try:
        spec = DysonSpec(args.a)
    except DomainError as exc:
        raise UsageError(str(exc))
    result: dict[str, Any] = {"a": list(spec.a)}
    if args.method in ("brute", "both"):
        result["brute"] = dyson_constant_term_bruteforce(spec)
    if args.method in ("closed", "both"):
        result["closed"] = dyson_closed_form(spec)
    if args.method == "both":
        result["equal"] = result["brute"] == result["closed"]
    return result


def cmd_survey(args) -> dict:
    m = args.m
    if m < 3 or m % 2 == 0 or is_prime(m):
        raise UsageError(f"--m must be an odd composite, got {m}")
    try:
        report = survey(m, budget=args.budget)
    except DomainError as exc:
        raise UsageError(str(exc))
    if report.counterexamples:
        print(f"NOTE: conjecture counterexample(s) found for m={m}: "
              f"{[list(e.distances) for e in report.counterexamples]}", file=sys.stderr)
    return report.to_dict(one_based=True)


def cmd_counterexample(args) -> dict:
    m = args.m
    if m < 3 or m % 2 == 0 or is_prime(m):
        raise UsageError(f"--m must be an odd composite, got {m}")
    try:
        inst = composite_counterexample(m, args.k)
    except DomainError as exc:
        raise UsageError(str(exc))
    k = inst.distances[0]
    witness = orbit_infeasibility_witness(inst)
    confirmation: dict[str, Any] = {"performed": False}
    if m <= MAX_CONFIRM_M:
        out = solve(inst)
        confirmation = {"performed": True, "verdict": out.verdict.value,
                        "nodes_explored": out.nodes_explored}
    return {
        "instance": inst.to_dict(),
        "orbits": orbit_decomposition(m, k).to_dict(one_based=True),
        "witness": witness.to_dict(),
        "exhaustive_confirmation": confirmation,
    }


COMMANDS = {
    "solve": cmd_solve,
    "certify": cmd_certify,
    "dyson": cmd_dyson,
    "survey": cmd_survey,
    "counterexample": cmd_counterexample,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kings-table", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("json", "table"), default="json")
        return sp

    sp = add("solve", "find a seating, or enumerate all of them")
    sp.add_argument("--m", type=int, required=True, help="seat count 2n+1")
    sp.add_argument("--distances", type=_int_list, required=True, help="comma list d_1,...,d_n")
    sp.add_argument("--all", action="store_true", help="enumerate every valid seating")
    sp.add_argument("--up-to-rotation", action="store_true",
                    help="with --all, list only seatings with the first couple at seat 1")
    sp.add_argument("--budget", type=_positive, default=None, help="node budget for the search")
    sp.add_argument("--reflection", action="store_true", help="enable reflection pruning")

    sp = add("certify", "compute the +-1 coefficient certificate for a prime p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--cross-check", action="store_true",
                    help="also expand the polynomial and compare coefficients")
    sp.add_argument("--distances", type=_int_list, default=None,
                    help="distances for the expansion (default 1,2,...,n)")
    sp.add_argument("--dump-poly", action="store_true",
                    help="include the expanded polynomial, one 'coeff e_1 ... e_n' line per term")

    sp = add("dyson", "constant term of the Dyson product")
    sp.add_argument("--a", type=_int_list, required=True)
    sp.add_argument("--method", choices=("brute", "closed", "both"), default="both")

    sp = add("survey", "decide every invertible distance multiset for composite m")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--budget", type=_positive, default=None)

    sp = add("counterexample", "the all-k instance for composite m and its orbit argument")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--k", type=int, default=None, help="divisor to use (default smallest prime)")
    return parser


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list) and all(isinstance(x, str) for x in v):
        return " | ".join(v)
    if isinstance(v, list) and all(not isinstance(x, (list, dict)) for x in v):
        return ",".join(_scalar(x) for x in v)
    if isinstance(v, list):
        return " ".join("(" + _scalar(x) + ")" for x in v)
    return str(v)


def _flatten(d: dict, prefix: str = "") -> tuple[list[tuple[str, str]], list[tuple[str, list[dict]]]]:
    rows, tables = [], []
    for key, v in d.items():
        name = f"{prefix}{key}"
        if isinstance(v, dict):
            r, t = _flatten(v, name + ".")
            rows += r
            tables += t
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            tables.append((name, v))
        else:
            rows.append((name, _scalar(v)))
    return rows, tables


def render_table(env: dict) -> str:
    """Aligned plain-text rendering of an envelope; same data as the JSON."""
    head = {k: v for k, v in env.items() if k != "result"}
    rows, tables = _flatten(head)
    r2, t2 = _flatten(env.get("result") or {}, "result.")
    rows += r2
    tables += t2
    width = max(len(k) for k, _ in rows)
    lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
    for name, items in tables:
        cols = list(dict.fromkeys(c for it in items for c in it))
        cells = [[_scalar(it.get(c)) for c in cols] for it in items]
        widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
        lines.append("")
        lines.append(f"{name}:")
        lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
        lines.append("  ".join("-" * w for w in widths))
        for r in cells:
            lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _emit(env: dict, fmt: str):
    if fmt == "table":
        sys.stdout.write(render_table(env))
    else:
        sys.stdout.write(json.dumps(env) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    start = time.perf_counter()
    command = argv[0] if argv and argv[0] in COMMANDS else None
    fmt = "json"
    inputs: dict[str, Any] = {}

    def envelope(status, result, message=None):
        env = {
            "command": command,
            "inputs": inputs,
            "status": status,
            "result": result,
            "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
        }
        if message is not None:
            env["message"] = message
        return env

    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        inputs = {k: v for k, v in vars(args).items() if k not in ("command", "format")}
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        _emit(envelope("error", {}, str(exc)), fmt)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        _emit(envelope("error", {}, str(exc)), fmt)
        return EXIT_RESOURCE
    except DomainError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        _emit(envelope("error", {}, str(exc)), fmt)
        return EXIT_USAGE
    _emit(envelope("ok", result), fmt)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
