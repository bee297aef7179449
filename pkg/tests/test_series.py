from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permutomino.census import census_by_class, count
from permutomino.series import (
    BivariateSeries,
    TruncatedSeries,
    census_bivariate,
    census_full_bivariate,
    functional_equation_residuals,
    kernel_residual,
    kernel_root,
    polynomial,
    series_b1,
    series_directed,
    series_f1,
    series_n1,
    series_r1,
    sqrt_1m4t,
)


def test_sqrt_1m4t_leading_coefficients():
    assert sqrt_1m4t(5).integer_coeffs() == [1, -2, -2, -4, -10, -28]


def test_sqrt_squares_back():
    s = sqrt_1m4t(20)
    assert s * s == polynomial([1, -4], 20)


def test_inverse_sqrt_gives_central_binomials():
    inv = sqrt_1m4t(10).inverse()
    assert inv.integer_coeffs() == [comb(2 * n, n) for n in range(11)]


def test_series_f1_matches_sequence():
    assert series_f1(7).integer_coeffs() == [0, 1, 4, 18, 84, 394, 1836, 8468]


def test_series_r1_and_n1_small_coefficients():
    assert series_r1(3)[2] == 2
    assert series_r1(3)[3] == 12
    assert series_n1(3)[3] == 2


def test_all_series_match_census_to_25():
    order = 25
    f1, b1, r1, n1 = series_f1(order), series_b1(order), series_r1(order), series_n1(order)
    for n in range(1, order + 1):
        b, r, g = census_by_class(n)
        assert (b1[n], r1[n], n1[n], f1[n]) == (b, r, g, count(n))


def test_class_series_sum_to_full_series():
    order = 25
    total = series_b1(order) + series_r1(order) + series_n1(order)
    assert total == series_f1(order)


def test_directed_series():
    order = 25
    directed = series_directed(order)
    assert directed[0] == 0
    for n in range(1, order + 1):
        assert directed[n] == Fraction(comb(2 * n, n), 2)
    assert directed == series_b1(order) + series_r1(order) / 2


def test_kernel_root_is_catalan():
    assert kernel_root(6).integer_coeffs() == [1, 1, 2, 5, 14, 42, 132]


def test_kernel_residual_vanishes():
    assert kernel_residual(30).is_zero()


def test_kernel_root_coefficients_positive():
    root = kernel_root(30)
    assert all(root[k] > 0 for k in range(31))


def test_division_requires_nonzero_constant():
    with pytest.raises(ZeroDivisionError):
        polynomial([0, 1], 5).inverse()


def test_sqrt_requires_unit_constant():
    with pytest.raises(ValueError):
        polynomial([4, 1], 5).sqrt()


def test_divide_by_t_requires_zero_low_coefficients():
    with pytest.raises(ValueError):
        polynomial([1, 1], 5).divide_by_t()
    assert polynomial([0, 3, 5], 5).divide_by_t().coeffs[:2] == (3, 5)


def test_mismatched_orders_rejected():
    with pytest.raises(ValueError):
        polynomial([1], 3) + polynomial([1], 4)


small_series = st.lists(st.integers(-9, 9), min_size=1, max_size=9)


@settings(max_examples=60, deadline=None)
@given(small_series, small_series)
def test_division_inverts_multiplication(a_coeffs, b_coeffs):
    order = 10
    a = polynomial(a_coeffs, order)
    b = polynomial([1] + b_coeffs, order)  # unit constant keeps it invertible
    assert (a * b) / b == a


@settings(max_examples=60, deadline=None)
@given(small_series)
def test_sqrt_round_trip(tail):
    order = 10
    f = polynomial([1] + tail, order)
    root = f.sqrt()
    assert root * root == f


def test_bivariate_full_series_first_levels():
    f = census_full_bivariate(3)
    assert [list(map(int, row)) for row in f.coeffs] == [[], [0, 1], [0, 2, 2], [0, 8, 6, 4]]


def test_bivariate_class_b_matches_rational_form():
    b, _, _ = census_bivariate(10)
    for n in range(1, 11):
        for k in range(11):
            expected = 2 ** (n - 1) if k == n else 0
            assert b.at(n, k) == expected


def test_bivariate_specialization_matches_univariate():
    assert census_full_bivariate(12).specialize_s1() == series_f1(12)


def test_functional_equation_residuals_vanish():
    residuals = functional_equation_residuals(12)
    assert residuals["R"].is_zero()
    assert residuals["G"].is_zero()
    # with s = 1 the cleared equations collapse to 0 = 0
    assert residuals["R"].specialize_s1().is_zero()


def test_bivariate_arithmetic():
    x = BivariateSeries.from_terms({(1, 1): 1}, 4)   # s t
    y = BivariateSeries.from_terms({(0, 0): 1}, 4)   # 1
    z = (x + y) * (x + y)
    assert z.at(0, 0) == 1
    assert z.at(1, 1) == 2
    assert z.at(2, 2) == 1
    assert z.shift(1, 0).at(3, 2) == 1
    assert not z.is_zero()
    assert (z - z).is_zero()
    assert z.max_abs_coeff() == 2


def test_truncated_series_shift():
    t = polynomial([0, 1], 4)
    assert (t.shift(2)).coeffs == polynomial([0, 0, 0, 1], 4).coeffs
    assert TruncatedSeries.constant(7, 3)[0] == 7
