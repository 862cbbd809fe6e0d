"""
Generalized Laguerre polynomials L_n^alpha and Laguerre functions l_n^alpha(x) = e^{-x/2} x^{alpha/2} L_n^alpha(x).

Evaluation uses the degree recurrence
    (k+1) L_{k+1}(x) = (2k+1+alpha-x) L_k(x) - (k+alpha) L_{k-1}(x),
vectorized over numpy arrays of real or complex arguments. The power series is kept as an exact-arithmetic oracle.
"""
from fractions import Fraction
import math

import numpy as np

from app.special.gamma import log_gamma, pochhammer
from app.util.exceptions import ParameterDomainError
from app.util.util import scalar_or_array


def _check_alpha(alpha):
    if not alpha > -1:
        raise ParameterDomainError('The Laguerre parameter alpha must be > -1 (got {}).'.format(alpha))


def laguerre_polynomial_values(n_max, alpha, x):
    """
    Evaluate L_0^alpha .. L_{n_max}^alpha at every point of x.

    :type n_max: int
    :type alpha: float
    :param x: real or complex points
    :type x: float | complex | numpy.ndarray
    :return: array of shape (n_max + 1,) + shape(x)
    :rtype: numpy.ndarray
    """
    _check_alpha(alpha)
    x = np.asarray(x)
    dtype = complex if np.iscomplexobj(x) else float
    values = np.empty((n_max + 1,) + x.shape, dtype=dtype)
    values[0] = 1.0
    if n_max >= 1:
        values[1] = 1.0 + alpha - x
    for k in range(1, n_max):
        values[k + 1] = ((2 * k + 1 + alpha - x) * values[k] - (k + alpha) * values[k - 1]) / (k + 1)
    return values


def laguerre_combination(coefficients, alpha, x):
    """
    Evaluate sum_m coefficients[m] * L_m^alpha(x) without storing the full table of degrees.

    :type coefficients: list[complex] | numpy.ndarray
    :type alpha: float
    :type x: numpy.ndarray
    :rtype: numpy.ndarray
    """
    _check_alpha(alpha)
    x = np.asarray(x)
    coefficients = np.asarray(coefficients)
    result = np.zeros(x.shape, dtype=complex)
    if coefficients.size == 0:
        return result
    previous = np.zeros(x.shape, dtype=complex)
    current = np.ones(x.shape, dtype=complex)
    result += coefficients[0] * current
    for k in range(coefficients.size - 1):
        if k == 0:
            following = 1.0 + alpha - x
        else:
            following = ((2 * k + 1 + alpha - x) * current - (k + alpha) * previous) / (k + 1)
        previous, current = current, following
        result += coefficients[k + 1] * current
    return result


def laguerre_polynomial(order, x):
    """
    L_n^alpha(x) by the degree recurrence.

    :type order: app.special.wavelet_order.WaveletOrder
    :type x: float | numpy.ndarray
    :rtype: float | numpy.ndarray
    """
    return scalar_or_array(laguerre_polynomial_values(order.n, order.alpha, x)[order.n])


def _exact_series(n, alpha, x):
    alpha = Fraction(alpha)
    x = Fraction(x)
    total = Fraction(0)
    for k in range(n + 1):
        # binomial(n + alpha, n - k) written as a rising product
        binomial = Fraction(1)
        for index in range(n - k):
            binomial *= alpha + k + 1 + index
        binomial /= math.factorial(n - k)
        total += (-1) ** k * binomial * x ** k / math.factorial(k)
    return total


def laguerre_series(order, x):
    """
    L_n^alpha(x) = (alpha+1)_n/n! sum_k (-n)_k/(alpha+1)_k x^k/k!, summed in exact rational arithmetic (the float
    inputs are exact binary rationals) and rounded once. Intended as an oracle; cost grows quickly with n.

    :type order: app.special.wavelet_order.WaveletOrder
    :type x: float
    :rtype: float
    """
    return float(_exact_series(order.n, order.alpha, float(x)))


def laguerre_series_magnitude(order, x):
    """
    Sum of the absolute values of the power-series terms at x, the natural scale for the rounding error of any
    evaluation of L_n^alpha(x). All binomial factors are positive for alpha > -1, so this equals L_n^alpha(-|x|).

    :type order: app.special.wavelet_order.WaveletOrder
    :type x: float
    :rtype: float
    """
    return float(_exact_series(order.n, order.alpha, -abs(float(x))))


def laguerre_function(order, x):
    """
    l_n^alpha(x): zero for x < 0, e^{-x/2} x^{alpha/2} L_n^alpha(x) for x >= 0.

    :type order: app.special.wavelet_order.WaveletOrder
    :type x: float | numpy.ndarray
    :rtype: float | numpy.ndarray
    """
    x = np.asarray(x, dtype=float)
    values = np.zeros(x.shape, dtype=float)

    at_origin = x == 0
    if np.any(at_origin):
        if order.alpha < 0:
            raise ParameterDomainError('l_{}^{} is unbounded at x=0 for alpha < 0.'.format(order.n, order.alpha))
        if order.alpha == 0:
            values[at_origin] = pochhammer(1.0, order.n) / math.factorial(order.n)

    positive = x > 0
    if np.any(positive):
        points = x[positive]
        polynomial = laguerre_polynomial_values(order.n, order.alpha, points)[order.n]
        values[positive] = np.exp(-points / 2 + order.half_alpha * np.log(points)) * polynomial
    return scalar_or_array(values)


def laguerre_norm_sq(order):
    """
    Squared L^2(0, inf) norm of l_n^alpha, Gamma(n+alpha+1)/n!.

    :type order: app.special.wavelet_order.WaveletOrder
    :rtype: float
    """
    return math.exp(log_gamma(order.n + order.alpha + 1) - log_gamma(order.n + 1))


def orthonormal_scale(m, beta):
    """
    The factor sqrt(m!/Gamma(m+beta+1)) that turns l_m^beta into the orthonormal basis element.

    :type m: int
    :type beta: float
    :rtype: float
    """
    _check_alpha(beta)
    return math.exp(0.5 * (log_gamma(m + 1) - log_gamma(m + beta + 1)))
