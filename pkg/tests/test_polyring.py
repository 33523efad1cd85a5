import itertools
import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from higher_specht import InvalidArgument
from higher_specht.combinatorics import Partition, Tableau, enumerate_partitions
from higher_specht.polyring import (DiagonalPolynomial, Monomial, Permutation, all_permutations,
                                    apply_diff, coefficient_of, delta_cells, delta_mu, diagonal_act,
                                    elementary_symmetric, homogeneous_component, hook_e, monomials_of_bidegree,
                                    mu_monomial, orbit_sum, pairing, polarized_power_sum, tableau_monomial)


def syms(n):
    return sp.symbols(f"x1:{n + 1}"), sp.symbols(f"y1:{n + 1}")


def to_sympy(f: DiagonalPolynomial):
    xs, ys = syms(f.n)
    return sp.Add(*[sp.Rational(c.numerator, c.denominator) * sp.Mul(*[v ** e for v, e in zip(xs + ys, k)])
                    for k, c in ((k, Fraction(c)) for k, c in f.items())])


def from_sympy(expr, n):
    xs, ys = syms(n)
    poly = sp.Poly(sp.expand(expr), *(xs + ys))
    return DiagonalPolynomial(n, {tuple(m): Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


N = 3
coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
key = st.tuples(*[st.integers(0, 2)] * (2 * N))
polys = st.dictionaries(key, coeff, max_size=6).map(lambda d: DiagonalPolynomial(N, d))
perms = st.permutations(list(range(1, N + 1))).map(lambda p: Permutation(tuple(p)))


# ------------------------------------------------------- arithmetic
def test_construction_drops_zeros_and_validates():
    f = DiagonalPolynomial(2, {(1, 0, 0, 0): 0, (0, 1, 0, 0): 3})
    assert len(f.terms) == 1
    with pytest.raises(InvalidArgument):
        DiagonalPolynomial(2, {(1, 0, 0): 1})
    with pytest.raises(InvalidArgument):
        DiagonalPolynomial.var("z", 1, 2)


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == DiagonalPolynomial.zero(N)


@settings(max_examples=50)
@given(polys, polys)
def test_arithmetic_matches_sympy(f, g):
    assert from_sympy(to_sympy(f) * to_sympy(g), N) == f * g
    assert from_sympy(to_sympy(f) - to_sympy(g), N) == f - g


@given(polys)
def test_json_roundtrip(f):
    assert DiagonalPolynomial.from_json(N, f.to_json()) == f


def test_json_is_canonical():
    f = DiagonalPolynomial(2, {(0, 0, 0, 0): 1, (0, 1, 0, 0): Fraction(-1, 2), (1, 0, 0, 0): 3})
    assert f.to_json() == [
        {"coeff": "3/1", "x": [1, 0], "y": [0, 0]},
        {"coeff": "-1/2", "x": [0, 1], "y": [0, 0]},
        {"coeff": "1/1", "x": [0, 0], "y": [0, 0]},
    ]


def test_homogeneous_components():
    n = 2
    f = DiagonalPolynomial.constant(n) + DiagonalPolynomial.var("x", 1, n) + DiagonalPolynomial.var("y", 2, n)
    assert homogeneous_component(f, 1, 0) == DiagonalPolynomial.var("x", 1, n)
    assert homogeneous_component(f, 3, 3) == DiagonalPolynomial.zero(n)
    assert f.bidegrees() == {(0, 0), (1, 0), (0, 1)}
    assert not f.is_bihomogeneous()


def test_monomials_of_bidegree_count():
    for n, d1, d2 in [(2, 1, 1), (3, 2, 1), (4, 2, 2)]:
        keys = monomials_of_bidegree(n, d1, d2)
        assert len(keys) == len(set(keys)) == math.comb(d1 + n - 1, n - 1) * math.comb(d2 + n - 1, n - 1)


# ---------------------------------------------------- permutations
def test_permutation_basics():
    p = Permutation.from_cycles(4, [(1, 2, 3)])
    assert p.images == (2, 3, 1, 4)
    assert p.cycle_type() == (3, 1)
    assert p.sign() == 1
    assert p * p.inverse() == Permutation.identity(4)
    assert Permutation.of_cycle_type(4, (2, 2)).cycle_type() == (2, 2)
    with pytest.raises(InvalidArgument):
        Permutation((1, 1, 2))


def test_diagonal_act_moves_indices():
    n = 3
    pi = Permutation.from_cycles(n, [(1, 2)])
    f = DiagonalPolynomial.var("x", 1, n) * DiagonalPolynomial.var("y", 3, n)
    assert diagonal_act(pi, f) == DiagonalPolynomial.var("x", 2, n) * DiagonalPolynomial.var("y", 3, n)


@given(perms, perms, polys)
def test_group_action_law(p, r, f):
    assert diagonal_act(p * r, f) == diagonal_act(p, diagonal_act(r, f))


@given(perms, polys, polys)
def test_action_is_ring_automorphism(p, f, g):
    assert diagonal_act(p, f * g) == diagonal_act(p, f) * diagonal_act(p, g)


@pytest.mark.parametrize("n", range(1, 6))
def test_symmetric_generators_are_invariant(n):
    gens = [elementary_symmetric(d, v, n) for d in range(1, n + 1) for v in "xy"]
    gens += [polarized_power_sum(a, b, n) for a in range(n + 1) for b in range(n + 1 - a) if a + b]
    for pi in all_permutations(n):
        for g in gens:
            assert diagonal_act(pi, g) == g


def test_elementary_symmetric_values():
    n = 3
    xs, _ = syms(n)
    assert to_sympy(elementary_symmetric(2, "x", n)) == sp.expand(xs[0] * xs[1] + xs[0] * xs[2] + xs[1] * xs[2])
    assert elementary_symmetric(4, "x", n).is_zero()
    assert elementary_symmetric(0, "y", n) == DiagonalPolynomial.constant(n)


def test_polarized_power_sum_value():
    n = 2
    xs, ys = syms(n)
    assert to_sympy(polarized_power_sum(2, 1, n)) == sp.expand(xs[0] ** 2 * ys[0] + xs[1] ** 2 * ys[1])


def test_hook_e_bidegrees():
    n, k = 4, 2
    # e_d^(k) is e_d(x) for d <= k-1 and e_{n-d}(y) otherwise
    assert hook_e((1,), k, n) == elementary_symmetric(1, "x", n)
    assert hook_e((3,), k, n) == elementary_symmetric(1, "y", n)
    assert hook_e((2, 1), k, n).bidegree() == (1, 2)


@given(perms, polys)
def test_orbit_sum_matches_explicit_sum(p, f):
    group = all_permutations(N)
    weights = [pi.sign() for pi in group]
    explicit = DiagonalPolynomial.zero(N)
    for pi, w in zip(group, weights):
        explicit = explicit + diagonal_act(pi, f).scale(w)
    assert orbit_sum(f, group, weights) == explicit


# ------------------------------------------------- tableau monomials
def test_tableau_monomial_reading_order():
    T = Tableau.parse("1 3 / 2")
    m = tableau_monomial(T, [1, 0, 0], [0, 0, 2])
    # cells in reading order hold 2, 1, 3
    assert m == Monomial((0, 1, 0), (0, 0, 2))


def test_mu_monomial_examples():
    m = mu_monomial(Tableau.parse("1 3 7 / 2 4 / 5 6"), Tableau.parse("1 2 4 / 3 5 / 6 7"), 4)
    assert m == Monomial((0, 0, 0, 1, 2, 2, 0), (1, 0, 1, 0, 0, 0, 0))
    m = mu_monomial(Tableau.parse("1 2 / 3 4"), Tableau.parse("1 3 / 2 4"), 2)
    assert m == Monomial((0, 0, 0, 1), (1, 0, 0, 0))
    assert str(m) == "x4*y1"


# ------------------------------------------------------------ Delta
@pytest.mark.parametrize("n", range(1, 5))
def test_delta_matches_sympy_determinant(n):
    xs, ys = syms(n)
    for mu in enumerate_partitions(n):
        cells = delta_cells(mu)
        M = sp.Matrix(n, n, lambda i, j: xs[i] ** cells[j][0] * ys[i] ** cells[j][1])
        assert from_sympy(M.det(), n) == delta_mu(mu)


def test_delta_of_single_cell_and_row():
    assert delta_mu(Partition((1,))) == DiagonalPolynomial.constant(1)
    n = 2
    assert delta_mu(Partition((2,))) == DiagonalPolynomial.var("y", 2, n) - DiagonalPolynomial.var("y", 1, n)


@pytest.mark.parametrize("n", range(1, 6))
def test_delta_alternates(n):
    for mu in enumerate_partitions(n):
        D = delta_mu(mu)
        for pi in all_permutations(n):
            assert diagonal_act(pi, D) == D.scale(pi.sign())


# ---------------------------------------------------- differentiation
@settings(max_examples=40)
@given(polys, polys)
def test_apply_diff_matches_sympy(f, g):
    xs, ys = syms(N)
    expected = 0
    G = to_sympy(g)
    for k, c in f.items():
        term = G
        for v, e in zip(xs + ys, k):
            if e:
                term = sp.diff(term, v, e)
        expected += sp.Rational(Fraction(c).numerator, Fraction(c).denominator) * term
    assert apply_diff(f, g) == from_sympy(expected, N)


@pytest.mark.parametrize("n", range(1, 4))
def test_pairing_orthogonality(n):
    for total in range(5):
        for d1 in range(total + 1):
            keys = monomials_of_bidegree(n, d1, total - d1)
            for a, b in itertools.product(keys, repeat=2):
                fa, fb = DiagonalPolynomial(n, {a: 1}), DiagonalPolynomial(n, {b: 1})
                expected = math.prod(math.factorial(e) for e in a) if a == b else 0
                assert pairing(fa, fb) == expected


def test_coefficient_of():
    n = 2
    f = DiagonalPolynomial.constant(n) + DiagonalPolynomial.var("x", 1, n).scale(3)
    assert coefficient_of(f, Monomial((1, 0), (0, 0))) == 3
    assert coefficient_of(f, Monomial((0, 1), (0, 0))) == 0
    with pytest.raises(InvalidArgument):
        coefficient_of(f, (1, 0))
