"""The +-1 certificate for the target-monomial coefficient and its checks.

For a prime ``p = 2n + 1`` the coefficient of ``x_1^(2n-2) ... x_n^(2n-2)``
in the seating polynomial is ``(2n)! / 2^n`` reduced mod p. Wilson gives
``(2n)! = -1`` and Fermat gives ``2^n = +-1``, so the coefficient is
``+-1`` and in particular nonzero. :func:`certify` computes it that way;
:func:`cross_check_expansion` recomputes it by brute expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from itertools import product
from typing import Sequence

from . import algebra
from .algebra import SparsePoly, build_king_poly, coefficient, total_degree
from .errors import DomainError, InconsistencyError, ResourceError
from .modring import (Residue, Sign, factorial_mod, fermat_sign, inverse_mod,
                      is_prime, pow_mod)
from .seating import Instance

MAX_GRID_POINTS = 10**6


@dataclass(frozen=True)
class Certificate:
    p: int
    n: int
    wilson_value: Residue
    two_power: Residue
    coeff_value: Residue
    sign: Sign
    expansion_coeff: Residue | None = None
    distances: tuple[int, ...] | None = None

    @property
    def consistent(self) -> bool:
        if self.expansion_coeff is None:
            return self.coeff_value in (1, self.p - 1)
        return self.expansion_coeff == self.coeff_value

    @property
    def coeff_sign(self) -> Sign:
        return Sign.PLUS if self.coeff_value == 1 else Sign.MINUS

    @property
    def target_exponents(self) -> tuple[int, ...]:
        return (2 * self.n - 2,) * self.n

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "target_exponents": list(self.target_exponents),
            "wilson_value": self.wilson_value.value,
            "two_power": self.two_power.value,
            "coeff_value": self.coeff_value.value,
            "coeff_sign": int(self.coeff_sign),
            "sign": int(self.sign),
            "expansion_coeff": None if self.expansion_coeff is None else self.expansion_coeff.value,
            "distances": None if self.distances is None else list(self.distances),
            "consistent": self.consistent,
        }


def _check_odd_prime(p: int):
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise DomainError(f"certificate needs an odd prime, got {p}")


def certify(p: int) -> Certificate:
    _check_odd_prime(p)
    n = (p - 1) // 2
    wilson = factorial_mod(2 * n, p)
    two_power = pow_mod(2, n, p)
    inv = inverse_mod(two_power.value, p)
    coeff = wilson * inv
    return Certificate(p=p, n=n, wilson_value=wilson, two_power=two_power,
                       coeff_value=coeff, sign=fermat_sign(p))


def cross_check_expansion(p: int, distances: Sequence[int],
                          max_terms: int | None = algebra.DEFAULT_MAX_TERMS) -> Certificate:
    """Certificate plus the target coefficient read off the full expansion.

    Raises :class:`ResourceError` when the expansion is too large; a
    mismatch is reported through ``consistent=False``, never raised.
    """
    cert = certify(p)
    inst = Instance.for_table(p, distances)
    f = build_king_poly(inst, p, max_terms=max_terms)
    got = Residue(coefficient(f, cert.target_exponents), p)
    return replace(cert, expansion_coeff=got, distances=inst.distances)


def cn_hypothesis_check(f: SparsePoly, t: Sequence[int], grid_sizes: Sequence[int]) -> bool:
    """Degree, coefficient and grid-size conditions of the Nullstellensatz."""
    if len(t) != f.nvars or len(grid_sizes) != f.nvars:
        raise DomainError("t and grid_sizes must have one entry per variable")
    if f.is_zero():
        return False
    return (total_degree(f) == sum(t)
            and coefficient(f, t) != 0
            and all(s > ti for s, ti in zip(grid_sizes, t)))


def cn_verify_small(f: SparsePoly, grids: Sequence[Sequence[int]],
                    t: Sequence[int] | None = None,
                    max_points: int = MAX_GRID_POINTS) -> tuple[int, ...] | None:
    """Lexicographically first grid point where ``f`` is nonzero, or ``None``.

    Each grid is sorted ascending before the scan. When ``t`` is given and
    the hypothesis holds, finding no such point raises
    :class:`InconsistencyError`.
    """
    if len(grids) != f.nvars:
        raise DomainError(f"need {f.nvars} grids, got {len(grids)}")
    axes = [sorted({v % f.p for v in g}) for g in grids]
    size = math.prod(len(a) for a in axes)
    if size > max_points:
        raise ResourceError(f"grid has {size} points (limit {max_points})")
    for point in product(*axes):
        if f.evaluate(point):
            return point
    if t is not None and cn_hypothesis_check(f, t, [len(a) for a in axes]):
        raise InconsistencyError(
            "Nullstellensatz hypothesis holds but f vanishes on the whole grid")
    return None
