"""Explicit search for seatings.

The search places couples in index order and tries seats in ascending
order, keeping the occupied seats in an ``m``-bit mask. One *node* is one
attempted placement of one couple, successful or not.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError
from .seating import Instance, Seating, is_valid


class Verdict(str, enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible_exhausted"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SolverConfig:
    fix_first_position: bool = True
    use_reflection_pruning: bool = False
    node_budget: int | None = None

    def __post_init__(self):
        if self.node_budget is not None and self.node_budget < 1:
            raise DomainError(f"node_budget must be >= 1, got {self.node_budget}")


@dataclass(frozen=True)
class SearchOutcome:
    verdict: Verdict
    nodes_explored: int
    witness: Seating | None = None

    @property
    def feasible(self) -> bool:
        return self.verdict is Verdict.FEASIBLE

    @property
    def decided(self) -> bool:
        return self.verdict is not Verdict.BUDGET_EXCEEDED


class Enumeration(NamedTuple):
    count: int
    seatings: list[Seating]


class _BudgetExceeded(Exception):
    pass


def _placements(inst: Instance) -> list[list[tuple[int, int]]]:
    """Per couple, every (seat, occupancy mask) in ascending seat order."""
    m = inst.m
    return [[(x, (1 << x) | (1 << ((x + d) % m))) for x in range(m)]
            for d in inst.distances]


def _candidate_lists(inst: Instance, cfg: SolverConfig) -> list[list[tuple[int, int]]]:
    cands = _placements(inst)
    m, ds = inst.m, inst.distances
    if cfg.fix_first_position:
        cands[0] = cands[0][:1]
    if cfg.use_reflection_pruning:
        # keep one member of each pair {s, reflection of s} on the first free coordinate
        if cfg.fix_first_position:
            if inst.n >= 2:
                cands[1] = [(x, b) for x, b in cands[1] if x <= (ds[0] - ds[1] - x) % m]
        else:
            cands[0] = [(x, b) for x, b in cands[0] if x <= (-x - ds[0]) % m]
    return cands


def solve(inst: Instance, cfg: SolverConfig = SolverConfig()) -> SearchOutcome:
    cands = _candidate_lists(inst, cfg)
    n = inst.n
    budget = cfg.node_budget
    nodes = 0
    xs = [0] * n

    def dfs(i: int, occ: int) -> bool:
        nonlocal nodes
        for x, bits in cands[i]:
            nodes += 1
            if budget is not None and nodes > budget:
                raise _BudgetExceeded
            if occ & bits:
                continue
            xs[i] = x
            if i + 1 == n or dfs(i + 1, occ | bits):
                return True
        return False

    try:
        found = dfs(0, 0)
    except _BudgetExceeded:
        return SearchOutcome(Verdict.BUDGET_EXCEEDED, budget)
    if not found:
        return SearchOutcome(Verdict.INFEASIBLE, nodes)
    witness = Seating(xs, inst.m)
    assert is_valid(inst, witness)
    return SearchOutcome(Verdict.FEASIBLE, nodes, witness)


def enumerate_all(inst: Instance, up_to_rotation: bool = False) -> Enumeration:
    """All valid seatings in lexicographic order.

    With ``up_to_rotation`` only representatives with ``x_1 = 0`` are listed.
    The full listing is produced by an independent unrestricted search, so
    ``full.count == m * reduced.count`` is a genuine check.
    """
    cands = _candidate_lists(inst, SolverConfig(fix_first_position=up_to_rotation))
    n, m = inst.n, inst.m
    out: list[Seating] = []
    xs = [0] * n

    def dfs(i: int, occ: int):
        for x, bits in cands[i]:
            if occ & bits:
                continue
            xs[i] = x
            if i + 1 == n:
                out.append(Seating(xs, m))
            else:
                dfs(i + 1, occ | bits)

    dfs(0, 0)
    return Enumeration(len(out), out)


def is_feasible(inst: Instance) -> bool:
    return solve(inst).feasible
