"""
Wavelet and Bergman transforms of spectral signals.

Every pairing here reduces to integral_0^inf t^c e^{-lambda t} P(t) dt with a polynomial P, which the rotated
Gauss-Laguerre rule of ``laplace_integral`` evaluates exactly. The conventions are

    W f(x, s)   = <f, T_x D_s window> = integral f^(t) e^{ixt} s^{1/2} conj(window^(s t)) dt,
    Ber^g f(z)  = integral t^g e^{izt} f^(t) dt,   z = x + i s,

so that a Paul window of order g gives W f(x, s) = s^{g+1/2} i^{g+1} / Gamma(g+1) Ber^g f(x + i s).
"""
import math

import numpy as np

from app.quadrature.gauss_laguerre import check_order, gauss_laguerre_rule, laplace_integral, required_order
from app.special.gamma import gamma_value, pochhammer
from app.special.laguerre import laguerre_polynomial_values, orthonormal_scale
from app.transforms.paul import PaulWindow, paul_wavelet
from app.transforms.windows import LaguerreWindow
from app.util.exceptions import ParameterDomainError
from app.util.util import principal_power, scalar_or_array


def _resolve_order(quadrature_order, degree):
    if quadrature_order is None:
        return required_order(degree)
    check_order(quadrature_order, degree)
    return quadrature_order


def window_coefficients(signal, window, x, s, quadrature_order=None):
    """
    <f, T_x D_s window> for arrays of translations x and scales s (broadcast together).

    :type signal: app.transforms.spectral_signal.SpectralSignal
    :type window: LaguerreWindow | PaulWindow
    :type x: float | numpy.ndarray
    :type s: float | numpy.ndarray
    :type quadrature_order: int | None
    :rtype: complex | numpy.ndarray
    """
    x, s = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(s, dtype=float))
    if np.any(s <= 0):
        raise ParameterDomainError('Scales must be positive.')
    order = _resolve_order(quadrature_order, max(signal.degree, 0) + window.degree)
    if signal.is_zero():
        return scalar_or_array(np.zeros(x.shape, dtype=complex))

    rates = signal.decay_rate + s - 1j * x
    scales = s[..., np.newaxis]

    def integrand(t):
        return signal.polynomial(t) * window.polynomial(scales * t)

    integral = np.asarray(laplace_integral(integrand, signal.basis_alpha / 2 + window.exponent, rates, order))
    prefactor = np.conj(window.scale_factor) * s ** (0.5 + window.exponent)
    return scalar_or_array(prefactor * integral)


def wavelet_coefficient(signal, order, point, quadrature_order=None):
    """
    W f(x, s) = <f, T_x D_s S_n^alpha(./2)> computed on the spectral side.

    :type signal: app.transforms.spectral_signal.SpectralSignal
    :type order: app.special.wavelet_order.WaveletOrder
    :type point: app.transforms.time_scale_point.TimeScalePoint
    :type quadrature_order: int | None
    :rtype: complex
    """
    return window_coefficients(signal, LaguerreWindow(order), point.x, point.s, quadrature_order)


def paul_wavelet_coefficient(signal, alpha, point, quadrature_order=None):
    """
    W f(x, s) with the Paul window psi_alpha.

    :type signal: app.transforms.spectral_signal.SpectralSignal
    :type alpha: float
    :type point: app.transforms.time_scale_point.TimeScalePoint
    :type quadrature_order: int | None
    :rtype: complex
    """
    return window_coefficients(signal, PaulWindow(alpha), point.x, point.s, quadrature_order)


def bergman_transform(signal, alpha, z, quadrature_order=None):
    """
    Ber^alpha f(z) = integral t^alpha e^{izt} f^(t) dt for z (scalar or array) in the upper half-plane.

    :type signal: app.transforms.spectral_signal.SpectralSignal
    :type alpha: float
    :type z: complex | numpy.ndarray
    :type quadrature_order: int | None
    :rtype: complex | numpy.ndarray
    """
    z = np.asarray(z, dtype=complex)
    if np.any(z.imag <= 0):
        raise ParameterDomainError('The Bergman transform is defined for Im z > 0.')
    exponent = alpha + signal.basis_alpha / 2
    if not exponent > -1:
        raise ParameterDomainError('The Bergman integral diverges at the origin for alpha + beta/2 <= -1.')
    order = _resolve_order(quadrature_order, max(signal.degree, 0))
    if signal.is_zero():
        return scalar_or_array(np.zeros(z.shape, dtype=complex))
    rates = signal.decay_rate - 1j * z
    return laplace_integral(signal.polynomial, exponent, rates, order)


def basis_coefficient_rows(basis_size, basis_alpha, window, x, s, quadrature_order=None):
    """
    The rows c[g, m] = <e_m, g> for the atoms g = T_x D_s window at every (x[g], s[g]) and the orthonormal basis
    elements e_0 .. e_{M-1} of parameter beta.

    :type basis_size: int
    :type basis_alpha: float
    :type window: LaguerreWindow | PaulWindow
    :type x: numpy.ndarray
    :type s: numpy.ndarray
    :type quadrature_order: int | None
    :return: array of shape (number of atoms, basis_size)
    :rtype: numpy.ndarray
    """
    x = np.asarray(x, dtype=float).reshape(-1)
    s = np.asarray(s, dtype=float).reshape(-1)
    if np.any(s <= 0):
        raise ParameterDomainError('Scales must be positive.')
    order = _resolve_order(quadrature_order, basis_size - 1 + window.degree)
    if x.size == 0:
        return np.zeros((0, basis_size), dtype=complex)

    exponent = basis_alpha / 2 + window.exponent
    rule = gauss_laguerre_rule(order, exponent)
    rates = 0.5 + s - 1j * x
    points = rule.nodes / rates[:, np.newaxis]
    window_values = window.polynomial(s[:, np.newaxis] * points)
    basis_values = laguerre_polynomial_values(basis_size - 1, basis_alpha, points)
    sums = np.sum(rule.weights * basis_values * window_values, axis=-1)
    normalization = np.array([orthonormal_scale(m, basis_alpha) for m in range(basis_size)])
    prefactor = np.conj(window.scale_factor) * s ** (0.5 + window.exponent) * np.exp((-exponent - 1) * np.log(rates))
    return (normalization[:, np.newaxis] * sums * prefactor).T


class ReconstructionCoefficients(object):
    """
    The decomposition S_n^alpha(t/2) = C sum_k a_k psi_{k+alpha/2}(t) into Paul wavelets, with
    C = Gamma(alpha/2+1)(1+alpha)_n/n! and a_k = (2i)^{k+alpha/2+1} (-n)_k (alpha/2+1)_k / (k! (alpha+1)_k).
    """

    def __init__(self, big_c, a_k, half_alpha):
        """
        :type big_c: float
        :type a_k: list[complex]
        :type half_alpha: float
        """
        self._big_c = big_c
        self._a_k = tuple(a_k)
        self._half_alpha = half_alpha

    @property
    def big_c(self):
        return self._big_c

    @property
    def a_k(self):
        """
        :rtype: tuple[complex]
        """
        return self._a_k

    def paul_orders(self):
        """
        The Paul wavelet orders gamma_k = k + alpha/2 that carry the coefficients.

        :rtype: list[float]
        """
        return [k + self._half_alpha for k in range(len(self._a_k))]

    def time_value(self, t):
        """
        C sum_k a_k psi_{gamma_k}(t), which reproduces S_n^alpha(t/2).

        :type t: float | numpy.ndarray
        :rtype: complex | numpy.ndarray
        """
        t = np.asarray(t, dtype=float)
        total = np.zeros(t.shape, dtype=complex)
        for a_k, gamma_k in zip(self._a_k, self.paul_orders()):
            total += a_k * np.asarray(paul_wavelet(gamma_k, t))
        return scalar_or_array(self._big_c * total)


def paul_decomposition(order):
    """
    :type order: app.special.wavelet_order.WaveletOrder
    :rtype: ReconstructionCoefficients
    """
    n, alpha, half_alpha = order.n, order.alpha, order.half_alpha
    big_c = gamma_value(half_alpha + 1) * pochhammer(1 + alpha, n) / math.factorial(n)
    a_k = [complex(principal_power(2j, k + half_alpha + 1)) * pochhammer(-n, k) * pochhammer(half_alpha + 1, k)
           / (math.factorial(k) * pochhammer(alpha + 1, k)) for k in range(n + 1)]
    return ReconstructionCoefficients(big_c, a_k, half_alpha)


def formula_coefficients(order):
    """
    The coefficients of s^{gamma_k+1/2} Ber^{gamma_k} in the wavelet transform,
    C a_k / (Gamma(gamma_k+1) i^{gamma_k+1}). They are real: (1+alpha)_n/n! 2^{gamma_k+1} (-n)_k / (k! (alpha+1)_k).

    :type order: app.special.wavelet_order.WaveletOrder
    :rtype: list[complex]
    """
    coefficients = paul_decomposition(order)
    return [coefficients.big_c * a_k / (gamma_value(gamma_k + 1) * complex(principal_power(1j, gamma_k + 1)))
            for a_k, gamma_k in zip(coefficients.a_k, coefficients.paul_orders())]


def wavelet_coefficient_via_formula(signal, order, point, quadrature_order=None):
    """
    W f(x, s) assembled from Bergman transforms at z = x + i s:

        F(z) = sum_k C a_k / (Gamma(gamma_k+1) i^{gamma_k+1}) s^{gamma_k+1/2} Ber^{gamma_k} f(z).

    It agrees with ``wavelet_coefficient`` at the same (x, s).

    :type signal: app.transforms.spectral_signal.SpectralSignal
    :type order: app.special.wavelet_order.WaveletOrder
    :type point: app.transforms.time_scale_point.TimeScalePoint
    :type quadrature_order: int | None
    :rtype: complex
    """
    gammas = paul_decomposition(order).paul_orders()
    total = 0j
    for coefficient, gamma_k in zip(formula_coefficients(order), gammas):
        total += coefficient * point.s ** (gamma_k + 0.5) * bergman_transform(signal, gamma_k, point.z,
                                                                               quadrature_order)
    return total
