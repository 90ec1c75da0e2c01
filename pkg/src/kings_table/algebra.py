"""Sparse polynomials over F_p, the seating polynomial, and Dyson constant terms.

A :class:`SparsePoly` stores ``{exponent tuple: coefficient}`` with
coefficients in ``[1, p)``; zero coefficients are never stored. A
:class:`LaurentPoly` does the same with signed exponents and exact Python
integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ResourceError
from .modring import is_prime
from .seating import Instance

Exponents = tuple[int, ...]

# soft limit on term counts; callers may raise it
DEFAULT_MAX_TERMS = 200_000


class SparsePoly:
    __slots__ = ("p", "nvars", "terms")

    def __init__(self, p: int, nvars: int, terms: Mapping[Exponents, int] | None = None):
        if p < 2:
            raise DomainError(f"modulus must be >= 2, got {p}")
        if nvars < 0:
            raise DomainError(f"negative variable count {nvars}")
        self.p = p
        self.nvars = nvars
        clean: dict[Exponents, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars or any(k < 0 for k in e):
                raise DomainError(f"bad exponent vector {e} for {nvars} variables")
            c %= p
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, p: int, nvars: int, terms: dict[Exponents, int]) -> "SparsePoly":
        obj = cls.__new__(cls)
        obj.p, obj.nvars, obj.terms = p, nvars, terms
        return obj

    @classmethod
    def zero(cls, p: int, nvars: int) -> "SparsePoly":
        return cls._raw(p, nvars, {})

    @classmethod
    def constant(cls, c: int, p: int, nvars: int) -> "SparsePoly":
        return cls(p, nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, p: int, nvars: int) -> "SparsePoly":
        return cls.constant(1, p, nvars)

    @classmethod
    def var(cls, i: int, p: int, nvars: int) -> "SparsePoly":
        e = [0] * nvars
        e[i] = 1
        return cls(p, nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence[int], const: int, p: int) -> "SparsePoly":
        """``const + sum(coeffs[i] * x_i)``."""
        nv = len(coeffs)
        terms = {(0,) * nv: const}
        for i, c in enumerate(coeffs):
            e = [0] * nv
            e[i] = 1
            terms[tuple(e)] = c
        return cls(p, nv, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return (self.p, self.nvars, self.terms) == (other.p, other.nvars, other.terms)

    def __repr__(self):
        return f"SparsePoly(p={self.p}, nvars={self.nvars}, terms={len(self.terms)})"

    def _check_compatible(self, other: "SparsePoly"):
        if self.p != other.p or self.nvars != other.nvars:
            raise DomainError(
                f"incompatible polynomials: F_{self.p}[{self.nvars} vars] vs "
                f"F_{other.p}[{other.nvars} vars]")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check_compatible(other)
        p = self.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SparsePoly._raw(p, self.nvars, out)

    def __neg__(self) -> "SparsePoly":
        p = self.p
        return SparsePoly._raw(p, self.nvars, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def scale(self, k: int) -> "SparsePoly":
        p = self.p
        k %= p
        if not k:
            return SparsePoly.zero(p, self.nvars)
        return SparsePoly._raw(p, self.nvars, {e: c * k % p for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise DomainError("negative power of a polynomial")
        result = SparsePoly.one(self.p, self.nvars)
        for _ in range(k):
            result = poly_mul(result, self)
        return result

    def total_degree(self) -> int:
        return total_degree(self)

    def coefficient(self, e: Sequence[int]) -> int:
        return coefficient(self, e)

    def evaluate(self, point: Sequence[int]) -> int:
        """Value of the polynomial at ``point`` in F_p, as an int in ``[0, p)``."""
        if len(point) != self.nvars:
            raise DomainError(f"point has {len(point)} coordinates, need {self.nvars}")
        p = self.p
        pts = [v % p for v in point]
        powers: list[dict[int, int]] = [{} for _ in pts]
        acc = 0
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    pw = cache.get(k)
                    if pw is None:
                        pw = cache[k] = pow(pts[i], k, p)
                    t = t * pw % p
                    if not t:
                        break
            acc += t
        return acc % p

    __call__ = evaluate

    def dumps(self) -> str:
        """One ``coeff e_1 ... e_n`` line per term, sorted by exponent vector."""
        return "".join(
            " ".join(map(str, (self.terms[e], *e))) + "\n" for e in sorted(self.terms))

    @classmethod
    def loads(cls, text: str, p: int, nvars: int) -> "SparsePoly":
        terms: dict[Exponents, int] = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            c, *e = map(int, line.split())
            terms[tuple(e)] = (terms.get(tuple(e), 0) + c)
        return cls(p, nvars, terms)


def poly_mul(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    f._check_compatible(g)
    p = f.p
    out: dict[Exponents, int] = {}
    get = out.get
    for e1, c1 in f.terms.items():
        for e2, c2 in g.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = (get(e, 0) + c1 * c2) % p
    return SparsePoly._raw(p, f.nvars, {e: c for e, c in out.items() if c})


def total_degree(f: SparsePoly) -> int:
    if f.is_zero():
        raise DomainError("the zero polynomial has no total degree")
    return max(sum(e) for e in f.terms)


def coefficient(f: SparsePoly, e: Sequence[int]) -> int:
    e = tuple(e)
    if len(e) != f.nvars:
        raise DomainError(f"exponent vector of length {len(e)} for {f.nvars} variables")
    return f.terms.get(e, 0)


def top_homogeneous_part(f: SparsePoly, d: int) -> SparsePoly:
    if d != total_degree(f):
        raise DomainError(f"degree {d} is not the total degree {total_degree(f)}")
    return SparsePoly._raw(f.p, f.nvars, {e: c for e, c in f.terms.items() if sum(e) == d})


def _monomial_bound(nvars: int, degree: int) -> int:
    return math.comb(degree + nvars, nvars)


def king_poly_factors(inst: Instance, p: int) -> list[SparsePoly]:
    """The four linear factors of each pair ``i < j``, in (i, j) lexicographic order."""
    n, ds = inst.n, inst.distances
    out = []
    for i, j in combinations(range(n), 2):
        diff = [0] * n
        diff[i], diff[j] = 1, -1
        out.append(SparsePoly.linear(diff, 0, p))                  # x_i - x_j
        out.append(SparsePoly.linear(diff, ds[i], p))              # x_i + d_i - x_j
        out.append(SparsePoly.linear(diff, -ds[j], p))             # x_i - x_j - d_j
        out.append(SparsePoly.linear(diff, ds[i] - ds[j], p))      # x_i + d_i - x_j - d_j
    return out


def build_king_poly(inst: Instance, p: int | None = None,
                    max_terms: int | None = DEFAULT_MAX_TERMS) -> SparsePoly:
    """Product of all pairwise differences of the ``2n`` occupied seats, expanded over F_p.

    It vanishes at a point exactly when two occupied seats collide. The
    expansion is refused with :class:`ResourceError` when the number of
    monomials of degree at most ``n(2n-2)`` exceeds ``max_terms``.
    """
    if p is None:
        p = inst.m
    if p != inst.m:
        raise DomainError(f"modulus {p} must equal the seat count {inst.m}")
    if not is_prime(p):
        raise DomainError(f"seat count {p} is composite; F_{p} is not a field")
    n = inst.n
    deg = n * (2 * n - 2)
    if max_terms is not None and _monomial_bound(n, deg) > max_terms:
        raise ResourceError(
            f"expanding the degree-{deg} polynomial in {n} variables may need "
            f"{_monomial_bound(n, deg)} terms (limit {max_terms})")
    f = SparsePoly.one(p, n)
    for factor in king_poly_factors(inst, p):
        f = poly_mul(f, factor)
    return f


def build_vandermonde_fourth(n: int, p: int) -> SparsePoly:
    if n < 1:
        raise DomainError(f"need at least one variable, got n={n}")
    f = SparsePoly.one(p, n)
    for i, j in combinations(range(n), 2):
        diff = [0] * n
        diff[i], diff[j] = 1, -1
        f = poly_mul(f, SparsePoly.linear(diff, 0, p) ** 4)
    return f


class LaurentPoly:
    """Integer Laurent polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | None = None):
        self.nvars = nvars
        clean: dict[Exponents, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise DomainError(f"bad exponent vector {e} for {nvars} variables")
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"LaurentPoly(nvars={self.nvars}, terms={len(self.terms)})"

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.nvars != other.nvars:
            raise DomainError("variable count mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.nvars, out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.nvars != other.nvars:
            raise DomainError("variable count mismatch")
        out: dict[Exponents, int] = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        res = LaurentPoly.__new__(LaurentPoly)
        res.nvars, res.terms = self.nvars, {e: c for e, c in out.items() if c}
        return res

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)


@dataclass(frozen=True)
class DysonSpec:
    a: tuple[int, ...]

    def __init__(self, a: Iterable[int]):
        a = tuple(int(v) for v in a)
        if not a:
            raise DomainError("Dyson product needs at least one variable")
        if any(v < 0 for v in a):
            raise DomainError(f"Dyson exponents must be nonnegative, got {a}")
        object.__setattr__(self, "a", a)

    @property
    def n(self) -> int:
        return len(self.a)


def _as_spec(spec) -> DysonSpec:
    return spec if isinstance(spec, DysonSpec) else DysonSpec(spec)


def dyson_product(spec, max_terms: int | None = DEFAULT_MAX_TERMS) -> LaurentPoly:
    """Expand the product over ordered pairs ``i != j`` of ``(1 - x_i/x_j)^a_i``.

    The expansion multiplies one linear factor at a time.
    """
    a = _as_spec(spec).a
    n = len(a)
    prod = LaurentPoly.one(n)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            e = [0] * n
            e[i], e[j] = 1, -1
            factor = LaurentPoly(n, {(0,) * n: 1, tuple(e): -1})
            for _ in range(a[i]):
                prod = prod * factor
                if max_terms is not None and len(prod) > max_terms:
                    raise ResourceError(
                        f"Laurent expansion for a={a} exceeded {max_terms} terms")
    return prod


def dyson_constant_term_bruteforce(spec, max_terms: int | None = DEFAULT_MAX_TERMS) -> int:
    return dyson_product(spec, max_terms).constant_term()


def dyson_closed_form(spec) -> int:
    """Multinomial coefficient ``(a_1 + ... + a_n)! / (a_1! ... a_n!)``."""
    a = _as_spec(spec).a
    num = math.factorial(sum(a))
    den = 1
    for v in a:
        den *= math.factorial(v)
    return num // den
