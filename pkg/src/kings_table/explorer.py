"""Empirical survey of seatability for composite tables with invertible distances.

For odd composite ``m`` the survey decides every multiset of ``n`` distances
drawn from ``{d in [1, n] : gcd(d, m) = 1}``. An infeasible multiset would
be a counterexample to Bacher's conjecture; it is reported, not raised.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterator

from .errors import DomainError
from .modring import is_prime
from .seating import Instance, Seating, is_valid
from .solver import SolverConfig, Verdict, solve

THREADS_ENV = "KINGS_TABLE_THREADS"
UNBUDGETED_MAX_M = 15


def default_workers() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        k = int(raw)
    except ValueError:
        raise DomainError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    if k < 1:
        raise DomainError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return k


def _check_modulus(m: int, allow_prime: bool):
    if m < 3 or m % 2 == 0:
        raise DomainError(f"m must be odd and >= 3, got {m}")
    if is_prime(m) and not allow_prime:
        raise DomainError(f"m={m} is prime; the survey is for composite m")


def invertible_distances(m: int) -> list[int]:
    n = (m - 1) // 2
    return [d for d in range(1, n + 1) if math.gcd(d, m) == 1]


def invertible_distance_multisets(m: int, allow_prime: bool = False) -> Iterator[tuple[int, ...]]:
    """Sorted distance vectors, each multiset once, in lexicographic order."""
    _check_modulus(m, allow_prime)
    n = (m - 1) // 2
    return combinations_with_replacement(invertible_distances(m), n)


@dataclass(frozen=True)
class SurveyEntry:
    distances: tuple[int, ...]
    verdict: Verdict
    witness: Seating | None
    nodes: int

    def to_dict(self, one_based: bool = False) -> dict:
        shift = 1 if one_based else 0
        return {
            "distances": list(self.distances),
            "verdict": self.verdict.value,
            "witness": None if self.witness is None
            else [x + shift for x in self.witness.positions],
            "nodes": self.nodes,
        }


@dataclass(frozen=True)
class SurveyReport:
    m: int
    entries: list[SurveyEntry] = field(default_factory=list)

    @property
    def n(self) -> int:
        return (self.m - 1) // 2

    @property
    def counterexamples(self) -> list[SurveyEntry]:
        return [e for e in self.entries if e.verdict is Verdict.INFEASIBLE]

    @property
    def undecided(self) -> list[SurveyEntry]:
        return [e for e in self.entries if e.verdict is Verdict.BUDGET_EXCEEDED]

    def to_dict(self, one_based: bool = False) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "allowed_distances": invertible_distances(self.m),
            "entry_count": len(self.entries),
            "feasible_count": sum(e.verdict is Verdict.FEASIBLE for e in self.entries),
            "undecided_count": len(self.undecided),
            "counterexample_found": bool(self.counterexamples),
            "counterexamples": [list(e.distances) for e in self.counterexamples],
            "entries": [e.to_dict(one_based) for e in self.entries],
        }


def _decide(args: tuple[tuple[int, ...], int | None]) -> SurveyEntry:
    distances, budget = args
    out = solve(Instance(distances), SolverConfig(node_budget=budget))
    return SurveyEntry(distances, out.verdict, out.witness, out.nodes_explored)


def survey(m: int, budget: int | None = None, workers: int | None = None,
           allow_prime: bool = False) -> SurveyReport:
    """Decide every invertible distance multiset for ``m`` seats.

    ``budget`` caps nodes per instance and is mandatory above
    ``m = 15``. Entries come back in enumeration order whatever ``workers``.
    """
    _check_modulus(m, allow_prime)
    if budget is None and m > UNBUDGETED_MAX_M:
        raise DomainError(f"m={m} > {UNBUDGETED_MAX_M} requires an explicit node budget")
    if workers is None:
        workers = default_workers()
    jobs = [(d, budget) for d in invertible_distance_multisets(m, allow_prime)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(_decide, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        entries = [_decide(j) for j in jobs]
    for e in entries:
        if e.witness is not None:
            assert is_valid(Instance(e.distances), e.witness)
    return SurveyReport(m, entries)


def find_conjecture_counterexample(m: int, allow_prime: bool = False) -> tuple[int, ...] | None:
    """First invertible multiset whose instance is infeasible by exhaustion."""
    for d in invertible_distance_multisets(m, allow_prime):
        if solve(Instance(d)).verdict is Verdict.INFEASIBLE:
            return d
    return None
