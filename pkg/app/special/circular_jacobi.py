"""
Circular Jacobi polynomials g_n^alpha, orthogonal on the unit circle against sin^alpha(theta/2) d theta.

With a = alpha/2 the polynomials have the closed form
    g_n(z) = sum_k [(a)_{n-k}/(n-k)!] [(a+1)_k/k!] z^k,
leading coefficient kappa_n = (a+1)_n/n! and value at the origin phi_n = (a)_n/n!. The three-term recurrence in
``circular_jacobi`` reproduces this closed form; see ``CircularJacobiRecurrence`` for its coefficients.
"""
import math

import numpy as np

from app.special.gamma import pochhammer
from app.util.exceptions import ParameterDomainError
from app.util.util import scalar_or_array


class CircularJacobiRecurrence(object):
    """
    Leading coefficients kappa_n and values at the origin phi_n = g_n(0) for n = 0..n_max. For n >= 1,
    phi_n = alpha (alpha/2+1)_{n-1} / (2 n!).
    """

    def __init__(self, alpha, kappa, value_at_zero):
        """
        :type alpha: float
        :type kappa: tuple[float]
        :type value_at_zero: tuple[float]
        """
        self._alpha = alpha
        self._kappa = tuple(kappa)
        self._value_at_zero = tuple(value_at_zero)

    @property
    def alpha(self):
        return self._alpha

    @property
    def kappa(self):
        """
        :rtype: tuple[float]
        """
        return self._kappa

    @property
    def value_at_zero(self):
        """
        :rtype: tuple[float]
        """
        return self._value_at_zero

    def __len__(self):
        return len(self._kappa)


def circular_jacobi_recurrence(alpha, n_max):
    """
    :type alpha: float
    :type n_max: int
    :rtype: CircularJacobiRecurrence
    """
    if not alpha > -1:
        raise ParameterDomainError('The circular Jacobi parameter alpha must be > -1 (got {}).'.format(alpha))
    half_alpha = alpha / 2
    kappa = [pochhammer(half_alpha + 1, n) / math.factorial(n) for n in range(n_max + 1)]
    value_at_zero = [1.0] + [alpha * pochhammer(half_alpha + 1, n - 1) / (2 * math.factorial(n))
                             for n in range(1, n_max + 1)]
    return CircularJacobiRecurrence(alpha, kappa, value_at_zero)


def circular_jacobi(order, z):
    """
    g_n^alpha(z) by the three-term recurrence

        kappa_n phi_n g_{n+1} = [kappa_n phi_{n+1} + kappa_{n+1} phi_n z] g_n
                                - [(kappa_n^2 - phi_n^2) / kappa_{n-1}] phi_{n+1} z g_{n-1},

    seeded with g_0 = 1 and g_1 = a + (a+1) z. For alpha = 0 every phi_n vanishes and g_n(z) = z^n.

    :type order: app.special.wavelet_order.WaveletOrder
    :type z: complex | numpy.ndarray
    :rtype: complex | numpy.ndarray
    """
    z = np.asarray(z, dtype=complex)
    n = order.n
    half_alpha = order.half_alpha
    if n == 0:
        return scalar_or_array(np.ones(z.shape, dtype=complex))
    if order.alpha == 0:
        return scalar_or_array(z ** n)

    recurrence = circular_jacobi_recurrence(order.alpha, n)
    kappa = recurrence.kappa
    phi = recurrence.value_at_zero
    previous = np.ones(z.shape, dtype=complex)
    current = half_alpha + (half_alpha + 1) * z
    for m in range(1, n):
        following = ((kappa[m] * phi[m + 1] + kappa[m + 1] * phi[m] * z) * current
                     - (kappa[m] ** 2 - phi[m] ** 2) / kappa[m - 1] * phi[m + 1] * z * previous)
        previous, current = current, following / (kappa[m] * phi[m])
    return scalar_or_array(current)


def circular_jacobi_coefficients(order):
    """
    Monomial coefficients c_0..c_n of g_n^alpha (c_k multiplies z^k).

    :type order: app.special.wavelet_order.WaveletOrder
    :rtype: numpy.ndarray
    """
    n = order.n
    half_alpha = order.half_alpha
    return np.array([pochhammer(half_alpha, n - k) / math.factorial(n - k)
                     * pochhammer(half_alpha + 1, k) / math.factorial(k) for k in range(n + 1)])


def circular_jacobi_series(order, z):
    """
    g_n^alpha(z) by direct summation of its closed form; the independent oracle for ``circular_jacobi``.

    :type order: app.special.wavelet_order.WaveletOrder
    :type z: complex | numpy.ndarray
    :rtype: complex | numpy.ndarray
    """
    z = np.asarray(z, dtype=complex)
    total = np.zeros(z.shape, dtype=complex)
    for k, coefficient in enumerate(circular_jacobi_coefficients(order)):
        total += coefficient * z ** k
    return scalar_or_array(total)


def szego_reflection_coefficients(alpha, n_max):
    """
    The ratios phi_n / kappa_n = a/(a+n), n = 1..n_max, with a = alpha/2. These are the reflection (Verblunsky)
    parameters that drive the Szego recurrence of the monic polynomials g_n / kappa_n.

    :type alpha: float
    :type n_max: int
    :rtype: numpy.ndarray
    """
    if not alpha > -1:
        raise ParameterDomainError('The circular Jacobi parameter alpha must be > -1 (got {}).'.format(alpha))
    half_alpha = alpha / 2
    return np.array([half_alpha / (half_alpha + n) for n in range(1, n_max + 1)])


def szego_polynomial(alpha, n, z):
    """
    g_n^alpha(z) through the Szego recurrence of the monic polynomials
        Phi_{k+1}(z) = z Phi_k(z) + beta_{k+1} Phi_k^*(z),   Phi_k^*(z) = z^k conj(Phi_k(1/conj(z))),
    with reflection parameters beta from ``szego_reflection_coefficients`` and g_n = kappa_n Phi_n. Real
    coefficients make Phi^* the reversed polynomial, so the pair (Phi, Phi^*) is advanced together and
    Phi_{k+1}(0) = beta_{k+1}.

    :type alpha: float
    :type n: int
    :type z: complex | numpy.ndarray
    :rtype: complex | numpy.ndarray
    """
    z = np.asarray(z, dtype=complex)
    reflections = szego_reflection_coefficients(alpha, n)
    monic = np.ones(z.shape, dtype=complex)
    reversed_monic = np.ones(z.shape, dtype=complex)
    for reflection in reflections:
        monic, reversed_monic = z * monic + reflection * reversed_monic, reversed_monic + reflection * z * monic
    kappa = pochhammer(alpha / 2 + 1, n) / math.factorial(n)
    return scalar_or_array(kappa * monic)
