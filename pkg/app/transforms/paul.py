"""
Paul wavelets psi_alpha(t) = (t + i)^{-alpha-1} and their spectra.

With the Fourier pair g(tau) = integral g^(xi) e^{i tau xi} d xi, the spectrum of psi_alpha is
    t^alpha e^{-t} / (Gamma(alpha+1) i^{alpha+1})   for t > 0,
and the wavelet transform with window psi_alpha is the Bergman transform of order alpha up to the factor
s^{alpha+1/2} i^{alpha+1} / Gamma(alpha+1).
"""
import math

import numpy as np

from app.special.gamma import gamma_value
from app.util.exceptions import ParameterDomainError
from app.util.util import principal_power, scalar_or_array


def _check_alpha(alpha):
    if not alpha > -1:
        raise ParameterDomainError('The Paul wavelet parameter alpha must be > -1 (got {}).'.format(alpha))


def paul_wavelet(alpha, t):
    """
    (1/(t + i))^{alpha+1} on the principal branch; the base never meets the negative real axis.

    :type alpha: float
    :type t: float | numpy.ndarray
    :rtype: complex | numpy.ndarray
    """
    _check_alpha(alpha)
    t = np.asarray(t, dtype=float)
    return principal_power(1.0 / (t + 1j), alpha + 1)


def paul_spectrum(alpha, t):
    """
    The spectrum of psi_alpha at real frequencies; zero for t <= 0.

    :type alpha: float
    :type t: float | numpy.ndarray
    :rtype: complex | numpy.ndarray
    """
    return PaulWindow(alpha).spectrum(t)


class PaulWindow(object):
    """
    The Paul wavelet as an analyzing window. Its spectrum has the form
    scale_factor * t^exponent * e^{-t} * polynomial(t) with a constant polynomial.
    """

    def __init__(self, alpha):
        """
        :type alpha: float
        """
        _check_alpha(alpha)
        self._alpha = float(alpha)
        self._scale_factor = 1.0 / (gamma_value(alpha + 1) * complex(principal_power(1j, alpha + 1)))

    @property
    def alpha(self):
        return self._alpha

    @property
    def name(self):
        return 'paul'

    @property
    def scale_factor(self):
        """
        :rtype: complex
        """
        return self._scale_factor

    @property
    def exponent(self):
        return self._alpha

    @property
    def degree(self):
        return 0

    def polynomial(self, u):
        """
        :type u: numpy.ndarray
        :rtype: numpy.ndarray
        """
        return np.ones(np.shape(u), dtype=complex)

    def spectrum(self, t):
        """
        :type t: float | numpy.ndarray
        :rtype: complex | numpy.ndarray
        """
        t = np.asarray(t, dtype=float)
        values = np.zeros(t.shape, dtype=complex)
        positive = t > 0
        points = t[positive]
        values[positive] = self._scale_factor * np.exp(self._alpha * np.log(points) - points)
        return scalar_or_array(values)

    def time_value(self, t):
        """
        :type t: float | numpy.ndarray
        :rtype: complex | numpy.ndarray
        """
        return paul_wavelet(self._alpha, t)

    def norm_sq(self):
        """
        Gamma(2 alpha + 1) / (2^{2 alpha + 1} Gamma(alpha + 1)^2).

        :rtype: float
        """
        if not self._alpha > -0.5:
            raise ParameterDomainError('psi_alpha has infinite norm for alpha <= -1/2.')
        return gamma_value(2 * self._alpha + 1) / (2 ** (2 * self._alpha + 1) * gamma_value(self._alpha + 1) ** 2)

    def admissibility_constant(self):
        """
        K = integral |psi^(t)|^2 dt / t = Gamma(2 alpha) / (2^{2 alpha} Gamma(alpha + 1)^2), finite for alpha > 0.

        :rtype: float
        """
        if not self._alpha > 0:
            raise ParameterDomainError('The Paul wavelet is admissible only for alpha > 0 (got {}).'
                                       .format(self._alpha))
        return gamma_value(2 * self._alpha) / (2 ** (2 * self._alpha) * gamma_value(self._alpha + 1) ** 2)


def paul_fourier_residual(alpha, x, s, frequencies, half_width=200.0, step=0.01):
    """
    Compare a numerical Fourier transform of conj(psi_alpha^{x,s}), psi^{x,s}(tau) = s^{-1/2} psi((tau - x)/s), with
    its closed form

        (1/2pi) integral conj(psi^{x,s}(tau)) e^{i tau t} d tau
            = 1_{[0,inf)}(t) s^{alpha+1/2} t^alpha e^{i(x+is)t} i^{alpha+1} / Gamma(alpha+1).

    The integral runs over [-half_width, half_width] with the trapezoid rule. The truncated tails are added back to
    first order by one integration by parts, g(T) e^{iTt}/(it) at each end, which matters for the slowly decaying
    alpha = 0 window.

    :type alpha: float
    :type x: float
    :type s: float
    :param frequencies: the frequencies t to check, all nonzero
    :type frequencies: list[float]
    :type half_width: float
    :type step: float
    :return: the largest error relative to the largest closed-form modulus over the frequencies
    :rtype: float
    """
    _check_alpha(alpha)
    if not s > 0:
        raise ParameterDomainError('The scale s must be positive (got {}).'.format(s))
    count = int(round(2 * half_width / step)) + 1
    tau = np.linspace(-half_width, half_width, count)
    step = tau[1] - tau[0]
    samples = np.conj(s ** -0.5 * np.asarray(paul_wavelet(alpha, (tau - x) / s)))
    trapezoid_weights = np.full(count, step)
    trapezoid_weights[0] = trapezoid_weights[-1] = step / 2

    constant = complex(principal_power(1j, alpha + 1)) / gamma_value(alpha + 1)
    numeric, exact = [], []
    for frequency in frequencies:
        if frequency == 0:
            raise ParameterDomainError('The tail correction needs nonzero frequencies.')
        phases = np.exp(1j * tau * frequency)
        value = np.sum(trapezoid_weights * samples * phases)
        value += (samples[0] * phases[0] - samples[-1] * phases[-1]) / (1j * frequency)
        numeric.append(value / (2 * math.pi))
        if frequency > 0:
            exact.append(constant * s ** (alpha + 0.5) * frequency ** alpha
                         * np.exp(1j * complex(x, s) * frequency))
        else:
            exact.append(0.0)
    numeric, exact = np.array(numeric), np.array(exact, dtype=complex)
    scale = max(np.max(np.abs(exact)), np.finfo(float).tiny)
    return float(np.max(np.abs(numeric - exact)) / scale)
