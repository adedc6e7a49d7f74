import random
from fractions import Fraction

import pytest

from src.core.errors import NonIntegerCoefficient
from src.core.polyseries import (
    IntPolynomial, RationalSeries, X, eulerian_numerator_a, eulerian_numerator_b,
    expected_facet_count, poly_eval, poly_interpolate, polynomial_to_numerator,
    series_coefficients, series_equal,
)


def test_human_format_is_descending():
    assert str(IntPolynomial((2, -3, 1))) == "x^2 - 3x + 2"
    assert str(IntPolynomial((0, -1))) == "-x"
    assert str(IntPolynomial()) == "0"
    assert IntPolynomial((2, -3, 1)).to_json() == [2, -3, 1]


def test_trailing_zeros_are_trimmed():
    p = IntPolynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPolynomial((0, 0)).degree == -1


def test_arithmetic():
    p = IntPolynomial((1, 1))
    assert p * p == IntPolynomial((1, 2, 1))
    assert p ** 3 == IntPolynomial((1, 3, 3, 1))
    assert p - p == IntPolynomial()
    assert 1 - X == IntPolynomial((1, -1))
    assert p.shift(2) == IntPolynomial((0, 0, 1, 1))
    assert X.substitute_linear(2, 1) == IntPolynomial((1, 2))
    assert IntPolynomial((1, 5)).reversed_at(1) == IntPolynomial((5, 1))
    with pytest.raises(ValueError):
        IntPolynomial((1, 2, 3)).reversed_at(1)


def test_eval_is_exact():
    p = IntPolynomial((2, -3, 1))
    assert poly_eval(p, 1) == 0
    assert p(2) == 0
    assert p(Fraction(1, 2)) == Fraction(3, 4)
    assert p(10 ** 30) == 10 ** 60 - 3 * 10 ** 30 + 2


def test_interpolation():
    assert poly_interpolate([(0, 0), (1, 0), (2, 2), (3, 6)]) == IntPolynomial((0, -1, 1))
    with pytest.raises(NonIntegerCoefficient):
        poly_interpolate([(0, 0), (1, 1), (2, 3)])
    with pytest.raises(ValueError):
        poly_interpolate([])


def test_series_normalizes_common_factor():
    r = RationalSeries(IntPolynomial((1, -1)), 2)
    assert r.numerator == IntPolynomial((1,))
    assert r.denom_power == 1
    assert RationalSeries(IntPolynomial(), 3).denom_power == 0


def test_series_addition_and_inflate():
    r = RationalSeries(IntPolynomial((1,)), 1) + RationalSeries(IntPolynomial((0, 1)), 2)
    assert r == RationalSeries(IntPolynomial((1,)), 2)
    assert RationalSeries(IntPolynomial((1,)), 1).inflate(2) == IntPolynomial((1, -1))
    with pytest.raises(ValueError):
        RationalSeries(IntPolynomial((1,)), 2).inflate(1)


def test_series_coefficients():
    assert series_coefficients(RationalSeries(IntPolynomial((1,)), 1), 4) == [1, 1, 1, 1]
    assert series_coefficients(RationalSeries(IntPolynomial((1, 1)), 2), 4) == [1, 3, 5, 7]
    assert series_coefficients(RationalSeries(IntPolynomial((1, 2)), 0), 3) == [1, 2, 0]


def test_polynomial_to_numerator_recovers_values():
    q = IntPolynomial((1, -2, 0, 3))
    r = polynomial_to_numerator(q)
    assert series_coefficients(r, 8) == [q(m) for m in range(8)]


def test_series_equal_cross_multiplies():
    a = RationalSeries(IntPolynomial((1,)), 1)
    b = RationalSeries(IntPolynomial((1, -1)), 2)
    assert series_equal(a, b)
    assert not series_equal(a, RationalSeries(IntPolynomial((1,)), 2))


def test_eulerian_numerators():
    assert eulerian_numerator_a(0) == IntPolynomial((1,))
    assert eulerian_numerator_a(1) == X
    assert eulerian_numerator_a(3) == IntPolynomial((0, 1, 4, 1))
    assert eulerian_numerator_b(0) == IntPolynomial((1,))
    assert eulerian_numerator_b(1) == IntPolynomial((1, 1))
    assert eulerian_numerator_b(2) == IntPolynomial((1, 6, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_eulerian_symmetry_and_sum(n):
    a = eulerian_numerator_a(n)
    b = eulerian_numerator_b(n)
    assert a.coefficient(0) == 0
    assert IntPolynomial(a.coeffs[1:]).is_palindromic(n - 1)
    assert b.is_palindromic(n)
    assert a.coefficient_sum() == expected_facet_count("A", n)
    assert b.coefficient_sum() == expected_facet_count("B", n)


def test_expected_facet_count():
    assert expected_facet_count("A", 4) == 24
    assert expected_facet_count("B", 3) == 48


def random_polynomial(rng, degree):
    return IntPolynomial(tuple(rng.randint(-9, 9) for _ in range(degree + 1)))


@pytest.mark.parametrize("seed", range(50))
def test_series_equal_is_an_equivalence(seed):
    rng = random.Random(seed)
    k = rng.randint(0, 4)
    r = RationalSeries(random_polynomial(rng, rng.randint(0, 4)), k)
    s = RationalSeries(r.inflate(k + 1), k + 1)
    t = RationalSeries(s.inflate(k + 3), k + 3)
    assert series_equal(r, r)
    assert series_equal(r, s) and series_equal(s, r)
    assert series_equal(s, t) and series_equal(r, t)
    assert series_coefficients(r, 10) == series_coefficients(t, 10)
    assert not series_equal(r, r + RationalSeries(IntPolynomial((1,)), 0))


@pytest.mark.parametrize("seed", range(50))
def test_polynomial_to_numerator_on_random_polynomials(seed):
    rng = random.Random(seed)
    q = random_polynomial(rng, rng.randint(0, 5))
    r = polynomial_to_numerator(q)
    assert series_coefficients(r, 12) == [q(m) for m in range(12)]
    assert r.denom_power <= q.degree + 1
