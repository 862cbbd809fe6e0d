import math

from genty import genty, genty_dataset
from hypothesis import given
from hypothesis.strategies import floats, integers
import numpy as np

from app.special.laguerre import (laguerre_combination, laguerre_function, laguerre_norm_sq, laguerre_polynomial,
                                  laguerre_polynomial_values, laguerre_series, laguerre_series_magnitude,
                                  orthonormal_scale)
from app.special.wavelet_order import WaveletOrder
from app.util.exceptions import ParameterDomainError
from test.framework.base_unit_test_case import BaseUnitTestCase


@genty
class TestLaguerre(BaseUnitTestCase):

    @genty_dataset(
        degree_zero=(0, 3.0, 7.0, 1.0),
        degree_one=(1, 0.5, 2.0, -0.5),
        degree_two_alpha_one=(2, 1.0, 2.0, -1.0),
        degree_two_alpha_zero=(2, 0.0, 1.0, -0.5),
        degree_three_alpha_zero=(3, 0.0, 1.0, -2 / 3),
        at_origin=(4, 2.0, 0.0, 15.0),
    )
    def test_laguerre_polynomial_matches_closed_forms(self, n, alpha, x, expected):
        self.assertAlmostEqual(laguerre_polynomial(WaveletOrder(n, alpha), x), expected, places=12)

    @given(integers(min_value=0, max_value=15), floats(min_value=-0.9, max_value=5.0),
           floats(min_value=0.0, max_value=40.0))
    def test_recurrence_agrees_with_exact_series(self, n, alpha, x):
        order = WaveletOrder(n, alpha)
        scale = max(1.0, laguerre_series_magnitude(order, x))
        self.assertAlmostEqual(laguerre_polynomial(order, x), laguerre_series(order, x), delta=1e-10 * scale)

    def test_polynomial_values_table_has_one_row_per_degree(self):
        x = np.array([0.0, 1.0, 2.5])
        values = laguerre_polynomial_values(3, 0.5, x)

        self.assertEqual(values.shape, (4, 3))
        np.testing.assert_allclose(values[1], 1.5 - x)

    def test_polynomial_values_accept_complex_points(self):
        values = laguerre_polynomial_values(1, 1.0, np.array([1j]))

        self.assertEqual(values.dtype, np.complex128)
        self.assertEqual(values[1][0], 2 - 1j)

    def test_combination_equals_weighted_sum_of_polynomials(self):
        x = np.linspace(0.0, 12.0, 9)
        coefficients = [1.0, -2.0, 0.5j, 3.0]
        table = laguerre_polynomial_values(3, 1.5, x)
        expected = sum(c * row for c, row in zip(coefficients, table))

        np.testing.assert_allclose(laguerre_combination(coefficients, 1.5, x), expected, rtol=1e-12, atol=1e-12)

    def test_combination_of_no_coefficients_is_zero(self):
        np.testing.assert_array_equal(laguerre_combination([], 0.0, np.ones(3)), np.zeros(3))

    def test_series_magnitude_bounds_the_polynomial(self):
        order = WaveletOrder(6, 0.5)
        for x in (0.5, 3.0, 10.0, 25.0):
            self.assertLessEqual(abs(laguerre_series(order, x)), laguerre_series_magnitude(order, x))

    def test_laguerre_function_vanishes_on_the_negative_half_line(self):
        values = laguerre_function(WaveletOrder(3, 1.0), np.array([-5.0, -0.1]))

        np.testing.assert_array_equal(values, [0.0, 0.0])

    @genty_dataset(
        alpha_zero=(WaveletOrder(5, 0.0), 1.0),
        alpha_positive=(WaveletOrder(2, 1.5), 0.0),
    )
    def test_laguerre_function_at_origin(self, order, expected):
        self.assertEqual(laguerre_function(order, 0.0), expected)

    def test_laguerre_function_is_unbounded_at_origin_for_negative_alpha(self):
        with self.assertRaises(ParameterDomainError):
            laguerre_function(WaveletOrder(1, -0.5), np.array([0.0, 1.0]))

    def test_laguerre_function_includes_exponential_and_power_factors(self):
        self.assertAlmostEqual(laguerre_function(WaveletOrder(0, 2.0), 2.0), 2 / math.e, places=14)

    def test_laguerre_function_has_the_expected_norm(self):
        order = WaveletOrder(3, 2.0)
        x = np.linspace(0.0, 120.0, 240001)
        values = laguerre_function(order, x)
        squares = values ** 2
        numeric = (x[1] - x[0]) * (np.sum(squares) - (squares[0] + squares[-1]) / 2)

        self.assertAlmostEqual(laguerre_norm_sq(order), 20.0, places=10)
        self.assertAlmostEqual(numeric, 20.0, delta=1e-4)

    @genty_dataset(
        trivial=(0, 0.0, 1.0),
        degree_two=(2, 1.0, math.sqrt(2 / 6)),
    )
    def test_orthonormal_scale(self, m, beta, expected):
        self.assertAlmostEqual(orthonormal_scale(m, beta), expected, places=13)

    def test_alpha_at_or_below_minus_one_is_rejected(self):
        with self.assertRaises(ParameterDomainError):
            laguerre_polynomial_values(2, -1.0, 0.5)
        with self.assertRaises(ParameterDomainError):
            orthonormal_scale(1, -2.0)
