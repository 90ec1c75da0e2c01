"""Modular and elementary number-theoretic arithmetic."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True, eq=False)
class Residue:
    """Canonical representative of an integer modulo ``modulus``.

    Negative or oversized values are reduced on construction. A residue
    compares equal to a plain ``int`` holding the same representative, so
    ``factorial_mod(4, 5) == 4`` reads naturally in calling code.
    """

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise DomainError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise DomainError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, exp: int):
        return pow_mod(self.value, exp, self.modulus)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return self.value

    __index__ = __int__

    def __repr__(self):
        return f"Residue({self.value} mod {self.modulus})"

    def signed(self) -> int:
        """Representative in (-m/2, m/2]; handy for printing -1 as -1."""
        v = self.value
        return v - self.modulus if 2 * v > self.modulus else v


class Sign(enum.IntEnum):
    PLUS = 1
    MINUS = -1


def _check_modulus(m: int):
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")


def is_prime(m: int) -> bool:
    if m < 2:
        raise DomainError(f"primality is defined here for m >= 2, got {m}")
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    for q in range(3, math.isqrt(m) + 1, 2):
        if m % q == 0:
            return False
    return True


def smallest_prime_factor(m: int) -> int:
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    if m % 2 == 0:
        return 2
    for q in range(3, math.isqrt(m) + 1, 2):
        if m % q == 0:
            return q
    return m


def factorial_mod(k: int, m: int) -> Residue:
    _check_modulus(m)
    if k < 0:
        raise DomainError(f"factorial of negative number {k}")
    acc = 1 % m
    for i in range(2, k + 1):
        acc = acc * i % m
        if acc == 0:
            break
    return Residue(acc, m)


def pow_mod(base: int, exp: int, m: int) -> Residue:
    """Square-and-multiply exponentiation modulo ``m``."""
    _check_modulus(m)
    if exp < 0:
        raise DomainError(f"negative exponent {exp}")
    result = 1 % m
    b = base % m
    while exp:
        if exp & 1:
            result = result * b % m
        b = b * b % m
        exp >>= 1
    return Residue(result, m)


def inverse_mod(a: int, m: int) -> Residue | None:
    """Inverse of ``a`` modulo ``m``, or ``None`` when gcd(a, m) != 1."""
    _check_modulus(m)
    # extended Euclid on (a mod m, m)
    old_r, r = a % m, m
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        return None
    return Residue(old_s, m)


def wilson_check(p: int) -> bool:
    """True iff (p-1)! is congruent to -1 modulo the prime ``p``."""
    if p < 2 or not is_prime(p):
        raise DomainError(f"wilson_check needs a prime, got {p}")
    return factorial_mod(p - 1, p) == p - 1


def fermat_sign(p: int) -> Sign:
    """Value of 2^((p-1)/2) mod p as a sign, for an odd prime ``p``."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise DomainError(f"fermat_sign needs an odd prime, got {p}")
    r = pow_mod(2, (p - 1) // 2, p)
    if r == 1:
        return Sign.PLUS
    if r == p - 1:
        return Sign.MINUS
    raise AssertionError(f"2^((p-1)/2) mod {p} = {r.value}, not +-1")
