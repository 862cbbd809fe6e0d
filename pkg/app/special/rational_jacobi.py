"""
The rational Jacobi functions S_n^alpha, whose Fourier transforms are the Laguerre functions l_n^alpha.

Two independent evaluation routes are provided:

* ``s_eval`` sums the terminating series in w = 1/(1/2 - it),
      S_n^alpha(t) = Gamma(a+1) (1+alpha)_n/n! sum_k (-n)_k (a+1)_k / (k! (alpha+1)_k) w^{k+a+1},  a = alpha/2;
* ``s_eval_via_disc`` factors through the disc variable z = (2t - i)/(2t + i),
      S_n^alpha(t) = Gamma(a+1) (1 - z)^{a+1} g_n^alpha(z).

Both bases stay in the right half-plane for real t, so principal powers never cross the branch cut.
"""
import math

import numpy as np

from app.special.circular_jacobi import circular_jacobi
from app.special.gamma import gamma_value, pochhammer
from app.util.util import principal_power, scalar_or_array


def series_coefficients(order):
    """
    The real coefficients of w^{k+a+1} in the series route, prefactors included.

    :type order: app.special.wavelet_order.WaveletOrder
    :rtype: numpy.ndarray
    """
    n, alpha, half_alpha = order.n, order.alpha, order.half_alpha
    prefactor = gamma_value(half_alpha + 1) * pochhammer(1 + alpha, n) / math.factorial(n)
    return np.array([prefactor * pochhammer(-n, k) * pochhammer(half_alpha + 1, k)
                     / (math.factorial(k) * pochhammer(alpha + 1, k)) for k in range(n + 1)])


def s_eval(order, t):
    """
    S_n^alpha(t) by direct summation of the series (Horner in w after one principal power).

    :type order: app.special.wavelet_order.WaveletOrder
    :type t: float | numpy.ndarray
    :rtype: complex | numpy.ndarray
    """
    t = np.asarray(t, dtype=float)
    w = 1.0 / (0.5 - 1j * t)
    polynomial = np.zeros(t.shape, dtype=complex)
    for coefficient in series_coefficients(order)[::-1]:
        polynomial = polynomial * w + coefficient
    return scalar_or_array(np.asarray(principal_power(w, order.half_alpha + 1)) * polynomial)


def s_eval_via_disc(order, t):
    """
    S_n^alpha(t) through the fractional map z = (2t - i)/(2t + i) and the circular Jacobi polynomial g_n^alpha.

    :type order: app.special.wavelet_order.WaveletOrder
    :type t: float | numpy.ndarray
    :rtype: complex | numpy.ndarray
    """
    t = np.asarray(t, dtype=float)
    z = (2 * t - 1j) / (2 * t + 1j)
    factor = np.asarray(principal_power(1 - z, order.half_alpha + 1))
    return scalar_or_array(gamma_value(order.half_alpha + 1) * factor * np.asarray(circular_jacobi(order, z)))
