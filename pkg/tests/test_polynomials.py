import itertools
import random
from fractions import Fraction
from math import factorial

from chaincalc.chains import chain, derive, labels_of, mul
from chaincalc.formal import LinComb
from chaincalc.graphs import ROOT, chains_of, graph
from chaincalc.polynomials import (
    ONE,
    Polynomial,
    X,
    ZERO,
    basis_poly,
    poly_arith,
    poly_of,
)
from chaincalc.quotient import classify, glue, pairings

from conftest import random_rpoly


def test_basis_poly_instances():
    assert basis_poly(0, 0) == ONE
    assert basis_poly(1, 1) == Polynomial([0, 1, -1])  # x - x^2
    third = basis_poly(0, 3)
    assert third == Polynomial(
        [Fraction(1, 6), Fraction(-1, 2), Fraction(1, 2), Fraction(-1, 6)]
    )
    assert third.evaluate(0) == Fraction(1, 6)


def test_poly_of_figure_tree():
    fig = graph(["a", "b", "c"], [("a", ROOT), ("b", ROOT), ("c", "b")])
    got = poly_of(chains_of(fig))
    assert got == 3 * basis_poly(0, 3)  # (1-x)^3 / 2


def test_poly_of_zero():
    assert poly_of(LinComb.zero()) == ZERO


def test_poly_of_block_sequence_sum():
    eps = (1, -1, 1, -1)
    total = LinComb.zero()
    for sigma in pairings(eps):
        total = total + chains_of(glue(eps, sigma).graph)
    got = poly_of(total)
    want = 3 * basis_poly(0, 2) + X * (ONE - X)
    assert got == want


def test_poly_arith_examples():
    assert poly_arith("derive", Polynomial([0, 1, -1])) == Polynomial([1, -2])
    half_sq = Polynomial([Fraction(1, 2), -1, Fraction(1, 2)])  # (1-x)^2/2
    assert poly_arith("integrate01", half_sq) == Fraction(1, 6)
    assert poly_arith("eval", X * (ONE - X), 1) == 0
    assert poly_arith("add", X, ONE) == Polynomial([1, 1])
    assert poly_arith("mul", X, X) == Polynomial([0, 0, 1])


def test_poly_of_is_multiplicative():
    rng = random.Random(61)
    for _ in range(150):
        x = random_rpoly(rng, list("abc"), 2, 2)
        y = random_rpoly(rng, list("def"), 2, 2)
        assert poly_of(mul(x, y)) == poly_of(x) * poly_of(y)


def test_poly_of_total_derivative():
    rng = random.Random(67)
    for _ in range(150):
        x = random_rpoly(rng, list("abcde"), 4, 3)
        total = ZERO
        for a in labels_of(x):
            total = total + poly_of(derive(x, a))
        assert total == poly_of(x).derivative()


def test_value_embedding_identity():
    for n in range(0, 7):
        for m in range(0, 7):
            v = basis_poly(n, m).evaluate(1)
            assert v == (Fraction(1, factorial(n)) if m == 0 else 0)
    for n in range(0, 7):
        total = ZERO
        for i in range(n + 1):
            total = total + basis_poly(i, n - i)
        assert total == Polynomial([Fraction(1, factorial(n))])


def test_analytic_lemma_all_catalan_sequences():
    for k in range(1, 6):
        for eps in itertools.product((1, -1), repeat=2 * k):
            if classify(eps) != "catalan":
                continue
            total = LinComb.zero()
            for sigma in pairings(eps):
                total = total + chains_of(glue(eps, sigma).graph)
            p = poly_of(total)
            for _ in range(k):
                p = p.derivative()
            assert p == Polynomial([(-1) ** k]), eps


def test_polynomial_repr_exact_fractions():
    assert repr(basis_poly(0, 2)) == "1/2 - 1 x + 1/2 x^2"
    assert repr(ZERO) == "0"
