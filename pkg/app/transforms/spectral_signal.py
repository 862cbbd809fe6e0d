import numpy as np

from app.special.laguerre import laguerre_combination, orthonormal_scale
from app.util.exceptions import ParameterDomainError
from app.util.util import scalar_or_array


class SpectralSignal(object):
    """
    A Hardy-space function given on the Fourier side by finitely many coefficients over the orthonormal Laguerre
    basis e_m(t) = sqrt(m!/Gamma(m+beta+1)) l_m^beta(t) of L^2(0, inf), optionally multiplied by the phase
    e^{-i x0 t} of a time translation by x0:

        spectrum(t) = e^{-i x0 t} e^{-t/2} t^{beta/2} sum_m c_m sqrt(m!/Gamma(m+beta+1)) L_m^beta(t),   t > 0.

    By Plancherel the squared norm is sum |c_m|^2 whatever the translation.
    """

    def __init__(self, basis_alpha, coefficients, translation=0.0):
        """
        :type basis_alpha: float
        :type coefficients: list[complex] | numpy.ndarray
        :param translation: time shift x0; the spectrum picks up the phase e^{-i x0 t}
        :type translation: float
        """
        basis_alpha = float(basis_alpha)
        if not basis_alpha > -1:
            raise ParameterDomainError('The basis parameter beta must be > -1 (got {}).'.format(basis_alpha))
        coefficients = np.array(coefficients, dtype=complex).reshape(-1)
        if not np.all(np.isfinite(coefficients)):
            raise ParameterDomainError('Spectral coefficients must be finite.')
        coefficients.setflags(write=False)
        self._basis_alpha = basis_alpha
        self._coefficients = coefficients
        self._translation = float(translation)
        self._scaled = coefficients * np.array([orthonormal_scale(m, basis_alpha) for m in range(len(coefficients))])

    @classmethod
    def basis_element(cls, m, basis_alpha):
        """
        The orthonormal basis element e_m.

        :type m: int
        :type basis_alpha: float
        :rtype: SpectralSignal
        """
        coefficients = np.zeros(m + 1, dtype=complex)
        coefficients[m] = 1.0
        return cls(basis_alpha, coefficients)

    @classmethod
    def from_laguerre_function(cls, n, basis_alpha):
        """
        The signal whose spectrum is exactly l_n^beta (not normalized).

        :type n: int
        :type basis_alpha: float
        :rtype: SpectralSignal
        """
        coefficients = np.zeros(n + 1, dtype=complex)
        coefficients[n] = 1.0 / orthonormal_scale(n, basis_alpha)
        return cls(basis_alpha, coefficients)

    @property
    def basis_alpha(self):
        """
        :rtype: float
        """
        return self._basis_alpha

    @property
    def coefficients(self):
        """
        :rtype: numpy.ndarray
        """
        return self._coefficients

    @property
    def translation(self):
        """
        :rtype: float
        """
        return self._translation

    @property
    def degree(self):
        """
        Degree of the polynomial part of the spectrum (-1 for the zero signal with no coefficients).

        :rtype: int
        """
        return len(self._coefficients) - 1

    @property
    def decay_rate(self):
        """
        The complex rate 1/2 + i x0 of the exponential factor of the spectrum.

        :rtype: complex
        """
        return complex(0.5, self._translation)

    def is_zero(self):
        """
        :rtype: bool
        """
        return not np.any(self._coefficients)

    def norm_sq(self):
        """
        :rtype: float
        """
        return float(np.sum(np.abs(self._coefficients) ** 2))

    def polynomial(self, t):
        """
        The polynomial part sum_m c_m sqrt(m!/Gamma(m+beta+1)) L_m^beta(t), evaluated at real or complex points.

        :type t: numpy.ndarray
        :rtype: numpy.ndarray
        """
        return laguerre_combination(self._scaled, self._basis_alpha, t)

    def spectrum(self, t):
        """
        The Fourier transform of the signal at real frequencies; zero for t <= 0.

        :type t: float | numpy.ndarray
        :rtype: complex | numpy.ndarray
        """
        t = np.asarray(t, dtype=float)
        values = np.zeros(t.shape, dtype=complex)
        positive = t > 0
        if np.any(positive):
            points = t[positive]
            envelope = np.exp(-self.decay_rate * points + self._basis_alpha / 2 * np.log(points))
            values[positive] = envelope * self.polynomial(points)
        return scalar_or_array(values)

    def shifted(self, x0):
        """
        The time translate f(. - x0), whose spectrum is multiplied by e^{-i x0 t}.

        :type x0: float
        :rtype: SpectralSignal
        """
        return SpectralSignal(self._basis_alpha, self._coefficients, self._translation + x0)

    def scaled(self, factor):
        """
        :type factor: complex
        :rtype: SpectralSignal
        """
        return SpectralSignal(self._basis_alpha, factor * self._coefficients, self._translation)

    def __add__(self, other):
        if not isinstance(other, SpectralSignal):
            return NotImplemented
        if other.basis_alpha != self._basis_alpha or other.translation != self._translation:
            raise ParameterDomainError('Only signals over the same basis and translation can be added.')
        size = max(len(self._coefficients), len(other.coefficients))
        total = np.zeros(size, dtype=complex)
        total[:len(self._coefficients)] += self._coefficients
        total[:len(other.coefficients)] += other.coefficients
        return SpectralSignal(self._basis_alpha, total, self._translation)

    def __repr__(self):
        return 'SpectralSignal(basis_alpha={}, coefficients={}, translation={})'.format(
            self._basis_alpha, list(self._coefficients), self._translation)


def combination(signals, weights):
    """
    sum_j weights[j] * signals[j] for signals over a common basis.

    :type signals: list[SpectralSignal]
    :type weights: list[complex]
    :rtype: SpectralSignal
    """
    if not signals:
        raise ParameterDomainError('A linear combination needs at least one signal.')
    total = signals[0].scaled(weights[0])
    for signal, weight in zip(signals[1:], weights[1:]):
        total = total + signal.scaled(weight)
    return total
