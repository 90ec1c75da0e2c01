import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from conftest import all_distance_vectors, direct_king_value
from kings_table.algebra import (DysonSpec, LaurentPoly, SparsePoly, build_king_poly,
                                 build_vandermonde_fourth, coefficient, dyson_closed_form,
                                 dyson_constant_term_bruteforce, dyson_product, poly_mul,
                                 top_homogeneous_part, total_degree)
from kings_table.errors import DomainError, ResourceError
from kings_table.seating import Instance, Seating, is_valid


def x(i, p=5, n=2):
    return SparsePoly.var(i, p, n)


def test_mul_identity_and_difference_of_squares():
    f = x(0) - x(1)
    assert f * SparsePoly.one(5, 2) == f
    assert poly_mul(x(0) - x(1), x(0) + x(1)) == SparsePoly(5, 2, {(2, 0): 1, (0, 2): -1})


def test_square_reduces_middle_coefficient():
    sq = (x(0) - x(1)) ** 2
    assert sq.terms == {(2, 0): 1, (1, 1): 3, (0, 2): 1}


def test_mul_rejects_mismatch():
    with pytest.raises(DomainError):
        poly_mul(x(0), SparsePoly.var(0, 7, 2))
    with pytest.raises(DomainError):
        poly_mul(x(0), SparsePoly.var(0, 5, 3))


def test_no_zero_coefficients_stored():
    f = SparsePoly(5, 2, {(1, 0): 5, (0, 1): 10, (0, 0): 3})
    assert f.terms == {(0, 0): 3}
    assert (x(0) - x(0)).is_zero()
    assert (x(0) * 5).is_zero()


def polys(p=7, nvars=3, max_terms=20):
    exps = st.tuples(*[st.integers(0, 3)] * nvars)
    return st.dictionaries(exps, st.integers(0, p - 1), max_size=max_terms).map(
        lambda t: SparsePoly(p, nvars, t))


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_laws(f, g, h):
    assert poly_mul(f, g) == poly_mul(g, f)
    assert poly_mul(poly_mul(f, g), h) == poly_mul(f, poly_mul(g, h))
    assert poly_mul(f, g + h) == poly_mul(f, g) + poly_mul(f, h)
    assert poly_mul(f, SparsePoly.zero(7, 3)).is_zero()
    assert all(c != 0 for c in poly_mul(f, g).terms.values())


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), st.tuples(*[st.integers(0, 6)] * 3))
def test_evaluation_is_a_ring_homomorphism(f, g, pt):
    assert poly_mul(f, g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt) % 7
    assert (f + g).evaluate(pt) == (f.evaluate(pt) + g.evaluate(pt)) % 7


def test_king_poly_single_couple_is_one():
    f = build_king_poly(Instance([1]))
    assert f == SparsePoly.one(3, 1) and total_degree(f) == 0


def test_king_poly_n2_equal_distances():
    u = x(0) - x(1)
    expected = u ** 2 * (u ** 2 - SparsePoly.one(5, 2))
    assert build_king_poly(Instance([1, 1])) == expected


def test_king_poly_against_sympy_expansion():
    sympy = pytest.importorskip("sympy")
    for d, p in [((1, 1), 5), ((1, 2), 5), ((2, 2), 5), ((1, 2, 3), 7), ((3, 1, 2), 7)]:
        n = len(d)
        xs = sympy.symbols(f"x0:{n}")
        expr = 1
        for i, j in itertools.combinations(range(n), 2):
            expr *= ((xs[i] - xs[j]) * (xs[i] + d[i] - xs[j])
                     * (xs[i] - xs[j] - d[j]) * (xs[i] + d[i] - xs[j] - d[j]))
        oracle = {e: c % p for e, c in sympy.Poly(sympy.expand(expr), *xs).terms() if c % p}
        assert build_king_poly(Instance(d)).terms == oracle


def test_king_poly_requires_prime_table():
    with pytest.raises(DomainError):
        build_king_poly(Instance([1, 1, 1, 1]))
    with pytest.raises(DomainError):
        build_king_poly(Instance([1, 2]), p=7)


def test_king_poly_resource_guard():
    with pytest.raises(ResourceError):
        build_king_poly(Instance([1, 2, 3, 4, 5]))


@pytest.mark.parametrize("d, deg", [((1, 2), 4), ((2, 1), 4), ((1, 2, 3), 12), ((2, 2, 2), 12)])
def test_degree_law(d, deg):
    n = len(d)
    assert total_degree(build_king_poly(Instance(d))) == deg == n * (2 * n - 2)


def test_total_degree_of_constant_and_zero():
    assert total_degree(SparsePoly.one(5, 2)) == 0
    with pytest.raises(DomainError):
        total_degree(SparsePoly.zero(5, 2))


def test_coefficient_examples():
    assert coefficient(SparsePoly.one(5, 2), (0, 0)) == 1
    v4 = (x(0) - x(1)) ** 4
    assert coefficient(v4, (2, 2)) == math.comb(4, 2) % 5 == 1
    assert coefficient(build_king_poly(Instance([1, 2])), (2, 2)) == 1
    assert coefficient(v4, (3, 3)) == 0
    with pytest.raises(DomainError):
        coefficient(v4, (2, 2, 0))


def test_top_homogeneous_part_examples():
    one = SparsePoly.one(5, 2)
    assert top_homogeneous_part(one, 0) == one
    for d in all_distance_vectors(2):
        assert top_homogeneous_part(build_king_poly(Instance(d)), 4) == (x(0) - x(1)) ** 4
    with pytest.raises(DomainError):
        top_homogeneous_part(build_king_poly(Instance([1, 2])), 3)


def test_top_part_identity_all_distances():
    for n, p in ((2, 5), (3, 7)):
        v4 = build_vandermonde_fourth(n, p)
        for d in all_distance_vectors(n):
            f = build_king_poly(Instance(d))
            assert top_homogeneous_part(f, n * (2 * n - 2)) == v4


def test_vandermonde_fourth_examples():
    assert build_vandermonde_fourth(1, 3) == SparsePoly.one(3, 1)
    v = build_vandermonde_fourth(2, 5)
    binom = {(4 - k, k): (-1) ** k * math.comb(4, k) % 5 for k in range(5)}
    assert v.terms == binom == {(4, 0): 1, (3, 1): 1, (2, 2): 1, (1, 3): 1, (0, 4): 1}


def test_evaluation_faithfulness_exhaustive():
    for n, p in ((2, 5), (3, 7)):
        for d in all_distance_vectors(n):
            inst = Instance(d)
            f = build_king_poly(inst)
            for pt in itertools.product(range(p), repeat=n):
                val = f.evaluate(pt)
                assert val == direct_king_value(pt, d, p)
                assert (val != 0) == is_valid(inst, Seating(pt, p))


def test_dump_roundtrip_and_order():
    f = build_king_poly(Instance([1, 2]))
    text = f.dumps()
    lines = text.splitlines()
    exps = [tuple(map(int, ln.split()[1:])) for ln in lines]
    assert exps == sorted(exps) and len(lines) == len(f)
    assert SparsePoly.loads(text, 5, 2) == f
    assert SparsePoly.one(5, 2).dumps() == "1 0 0\n"


def laurent_linear_expansion_oracle(a):
    """Constant term via explicit sum over binomial choices, one per ordered pair."""
    n = len(a)
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    total = 0
    for ks in itertools.product(*[range(a[i] + 1) for i, _ in pairs]):
        e = [0] * n
        coeff = 1
        for (i, j), k in zip(pairs, ks):
            e[i] += k
            e[j] -= k
            coeff *= (-1) ** k * math.comb(a[i], k)
        if not any(e):
            total += coeff
    return total


@pytest.mark.parametrize("a, expected", [((0, 0, 0), 1), ((1, 1), 2), ((2, 2, 2), 90), ((2, 2), 6)])
def test_dyson_examples(a, expected):
    assert dyson_constant_term_bruteforce(a) == expected
    assert dyson_closed_form(a) == expected


def test_dyson_small_product_shape():
    prod = dyson_product((1, 1))
    assert prod.terms == {(0, 0): 2, (1, -1): -1, (-1, 1): -1}


def test_dyson_against_binomial_sum_oracle():
    for a in [(1, 2), (3, 0), (1, 1, 1), (2, 1, 0), (1, 2, 1)]:
        assert dyson_constant_term_bruteforce(a) == laurent_linear_expansion_oracle(a)


def test_dyson_matches_multinomial_n_le_3():
    for n in (1, 2, 3):
        for a in itertools.product(range(4), repeat=n):
            assert dyson_constant_term_bruteforce(a) == dyson_closed_form(a)


def test_dyson_n4_spot_checks():
    assert dyson_constant_term_bruteforce((1, 1, 1, 1)) == 24
    assert dyson_constant_term_bruteforce((2, 2, 2, 2)) == 2520 == math.factorial(8) // 2 ** 4


def test_dyson_resource_guard_and_spec_validation():
    with pytest.raises(ResourceError):
        dyson_constant_term_bruteforce((3, 3, 3, 3), max_terms=100)
    with pytest.raises(DomainError):
        DysonSpec([])
    with pytest.raises(DomainError):
        DysonSpec([1, -1])


def test_laurent_arithmetic():
    a = LaurentPoly(2, {(1, -1): 2, (0, 0): 1})
    b = LaurentPoly(2, {(-1, 1): 3})
    assert (a * b).terms == {(0, 0): 6, (-1, 1): 3}
    assert (a + LaurentPoly(2, {(0, 0): -1})).terms == {(1, -1): 2}
    assert LaurentPoly(2, {(0, 0): 0}).terms == {}
