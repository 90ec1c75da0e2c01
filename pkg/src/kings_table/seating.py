"""Instances, seatings, symmetry maps and the composite-case obstruction.

Seats are numbered ``0 .. m-1`` with ``m = 2n + 1``. Couple ``i`` seated at
``x`` occupies seats ``x`` and ``x + d_i`` (mod m), measured clockwise.
Because ``1 <= d_i <= n`` the clockwise offset is also the short-arc
distance, so nothing is lost by fixing the direction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError
from .modring import is_prime, smallest_prime_factor


@dataclass(frozen=True)
class Instance:
    distances: tuple[int, ...]

    def __init__(self, distances: Sequence[int]):
        object.__setattr__(self, "distances", tuple(int(d) for d in distances))
        n = len(self.distances)
        if n < 1:
            raise DomainError("an instance needs at least one couple")
        for d in self.distances:
            if not 1 <= d <= n:
                raise DomainError(f"distance {d} outside [1, {n}]")

    @property
    def n(self) -> int:
        return len(self.distances)

    @property
    def m(self) -> int:
        return 2 * self.n + 1

    @classmethod
    def for_table(cls, m: int, distances: Sequence[int]) -> "Instance":
        """Build an instance and check that it fits a table of ``m`` seats."""
        if m < 3 or m % 2 == 0:
            raise DomainError(f"seat count must be odd and >= 3, got {m}")
        if len(distances) != (m - 1) // 2:
            raise DomainError(
                f"m={m} needs {(m - 1) // 2} distances, got {len(distances)}")
        return cls(distances)

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "distances": list(self.distances)}


@dataclass(frozen=True)
class Seating:
    """Position ``x_i`` of the first spouse of each couple, modulo ``m``."""

    positions: tuple[int, ...]
    m: int

    def __init__(self, positions: Sequence[int], m: int):
        if m < 2:
            raise DomainError(f"modulus must be >= 2, got {m}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "positions", tuple(int(x) % m for x in positions))

    def __len__(self):
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)


@dataclass(frozen=True)
class OrbitDecomposition:
    m: int
    k: int
    orbits: tuple[tuple[int, ...], ...]

    @property
    def orbit_size(self) -> int:
        return self.m // self.k

    def orbit_of(self, seat: int) -> int:
        return seat % self.m % self.k

    def to_dict(self, one_based: bool = False) -> dict:
        shift = 1 if one_based else 0
        return {
            "m": self.m,
            "k": self.k,
            "orbit_size": self.orbit_size,
            "orbits": [[s + shift for s in orb] for orb in self.orbits],
        }


@dataclass(frozen=True)
class InfeasibilityWitness:
    """Counting argument showing an all-``k`` instance cannot be seated.

    Each orbit (seats congruent mod ``k``) has an odd number of seats and a
    couple at distance ``k`` sits inside one orbit, so every orbit keeps at
    least one empty seat. With ``orbit_count > 1`` orbits that is more empty
    seats than the single one available.
    """

    k: int
    orbit_size: int
    orbit_count: int
    explanation: dict = field(compare=False)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "orbit_size": self.orbit_size,
            "orbit_count": self.orbit_count,
            "explanation": dict(self.explanation),
        }


def _check_conforms(inst: Instance, s: Seating):
    if len(s.positions) != inst.n:
        raise DomainError(
            f"seating has {len(s.positions)} positions, instance has {inst.n} couples")
    if s.m != inst.m:
        raise DomainError(f"seating modulus {s.m} != instance modulus {inst.m}")


def occupied_seats(inst: Instance, s: Seating) -> list[int]:
    _check_conforms(inst, s)
    m = inst.m
    return list(s.positions) + [(x + d) % m for x, d in zip(s.positions, inst.distances)]


def is_valid(inst: Instance, s: Seating) -> bool:
    seats = occupied_seats(inst, s)
    return len(set(seats)) == len(seats)


def empty_seat(inst: Instance, s: Seating) -> int | None:
    """The single unoccupied seat of a valid seating, else ``None``."""
    if not is_valid(inst, s):
        return None
    (free,) = set(range(inst.m)) - set(occupied_seats(inst, s))
    return free


def rotate(s: Seating, c: int) -> Seating:
    return Seating([x + c for x in s.positions], s.m)


def reflect(inst: Instance, s: Seating) -> Seating:
    # x -> -x maps the couple {x, x+d} to {-x-d, -x}; keep the first-spouse form
    _check_conforms(inst, s)
    return Seating([-x - d for x, d in zip(s.positions, inst.distances)], s.m)


def orbit_decomposition(m: int, k: int) -> OrbitDecomposition:
    if m < 3 or m % 2 == 0:
        raise DomainError(f"m must be odd and >= 3, got {m}")
    if not 1 < k < m or m % k:
        raise DomainError(f"k={k} is not a proper divisor of {m}")
    orbits = tuple(tuple(range(j, m, k)) for j in range(k))
    return OrbitDecomposition(m=m, k=k, orbits=orbits)


def composite_counterexample(m: int, k: int | None = None) -> Instance:
    """All-``k`` instance on ``m`` seats; ``k`` defaults to the smallest prime divisor."""
    if m < 3 or m % 2 == 0:
        raise DomainError(f"m must be odd and >= 3, got {m}")
    if is_prime(m):
        raise DomainError(f"m={m} is prime; every instance is seatable")
    if k is None:
        k = smallest_prime_factor(m)
    elif not 1 < k < m or m % k:
        raise DomainError(f"k={k} is not a proper divisor of {m}")
    n = (m - 1) // 2
    return Instance([k] * n)


def orbit_infeasibility_witness(inst: Instance) -> InfeasibilityWitness | None:
    k = inst.distances[0]
    m = inst.m
    if any(d != k for d in inst.distances) or not 1 < k < m or m % k:
        return None
    size = m // k
    explanation = {
        "orbit_rule": f"seats congruent mod {k} form an orbit; a couple at distance {k} stays in one orbit",
        "orbit_size_is_odd": size % 2 == 1,
        "min_empty_per_orbit": 1,
        "min_empty_total": k,
        "empty_seats_available": m - 2 * inst.n,
        "conclusion": "infeasible",
    }
    return InfeasibilityWitness(k=k, orbit_size=size, orbit_count=k, explanation=explanation)
