"""
The functions Psi_n^alpha on the upper half-plane, the weighted pullback T_alpha to the disc and the
proportionality between Bergman transforms of Laguerre functions and Psi_n.
"""
from enum import Enum
import math

import numpy as np

from app.special.gamma import gamma_ratio
from app.transforms.spectral_signal import SpectralSignal
from app.transforms.wavelet_transform import bergman_transform
from app.util import log
from app.util.exceptions import DegenerateInputError, ParameterDomainError
from app.util.util import principal_power, scalar_or_array


_DEGENERATE_MODULUS = 1e-12

_logger = log.get_logger(__name__)


class Pullback(str, Enum):
    """
    How T_alpha maps a disc point back to the half-plane. LITERAL is z = i/2 (w+1)/(w-1), which leaves the upper
    half-plane for |w| < 1; INVERSE is z = i/2 (1+w)/(1-w), the inverse of w = (2z - i)/(2z + i).
    """
    LITERAL = 'literal'
    INVERSE = 'inverse'


def psi_basis(n, alpha, z):
    """
    Psi_n^alpha(z) = ((iz + 1/2)/(iz - 1/2))^n (iz - 1/2)^{-alpha-1} with a principal power.

    :type n: int
    :type alpha: float
    :type z: complex | numpy.ndarray
    :rtype: complex | numpy.ndarray
    """
    z = np.asarray(z, dtype=complex)
    if np.any(z.imag <= 0):
        raise ParameterDomainError('Psi_n^alpha is defined on the upper half-plane only (Im z > 0).')
    base = 1j * z - 0.5
    ratio = (1j * z + 0.5) / base
    return scalar_or_array(ratio ** n * np.asarray(principal_power(base, -alpha - 1)))


def pullback_point(w, pullback=Pullback.INVERSE):
    """
    :type w: complex | numpy.ndarray
    :type pullback: Pullback
    :rtype: complex | numpy.ndarray
    """
    w = np.asarray(w, dtype=complex)
    if np.any(np.abs(w) >= 1):
        raise ParameterDomainError('T_alpha is defined on the open unit disc (|w| < 1).')
    if pullback == Pullback.LITERAL:
        return scalar_or_array(0.5j * (w + 1) / (w - 1))
    return scalar_or_array(0.5j * (1 + w) / (1 - w))


def t_alpha_map(function, alpha, w, pullback=Pullback.INVERSE):
    """
    T_alpha g(w) = g(z(w)) (1/(1 - w))^{alpha+1}. The function decides what to do with points outside its domain;
    Psi_n raises a domain error for the lower half-plane points the literal pullback produces.

    :param function: vectorized callable on the upper half-plane
    :type function: callable
    :type alpha: float
    :type w: complex | numpy.ndarray
    :type pullback: Pullback
    :rtype: complex | numpy.ndarray
    """
    z = pullback_point(w, pullback)
    w = np.asarray(w, dtype=complex)
    weight = np.asarray(principal_power(1.0 / (1 - w), alpha + 1))
    return scalar_or_array(np.asarray(function(z)) * weight)


class ProportionalityReport(object):
    """
    The outcome of comparing two functions that should be proportional: the mean ratio, its largest relative spread,
    and the samples that were skipped because the denominator vanished.
    """

    def __init__(self, ratios, skipped, expected_modulus=None, printed_constant=None):
        """
        :type ratios: list[complex]
        :type skipped: list[complex]
        :type expected_modulus: float | None
        :type printed_constant: complex | None
        """
        if not ratios:
            raise DegenerateInputError('Every sample was degenerate; no ratio could be formed.')
        ratios = np.array(ratios, dtype=complex)
        self.ratio_mean = complex(np.mean(ratios))
        self.ratio_spread = float(np.max(np.abs(ratios - self.ratio_mean)) / abs(self.ratio_mean))
        self.sample_count = len(ratios)
        self.skipped = list(skipped)
        self.expected_modulus = expected_modulus
        self.printed_constant = printed_constant

    @property
    def modulus(self):
        return abs(self.ratio_mean)

    @property
    def phase(self):
        """
        The measured argument of the constant, in (-pi, pi].

        :rtype: float
        """
        return math.atan2(self.ratio_mean.imag, self.ratio_mean.real)

    def modulus_error(self):
        """
        :rtype: float
        """
        if self.expected_modulus is None:
            return 0.0
        return abs(self.modulus - self.expected_modulus) / self.expected_modulus

    def to_dict(self):
        document = {
            'ratio_mean': [self.ratio_mean.real, self.ratio_mean.imag],
            'ratio_spread': self.ratio_spread,
            'modulus': self.modulus,
            'phase': self.phase,
            'samples': self.sample_count,
            'skipped': len(self.skipped),
        }
        if self.expected_modulus is not None:
            document['expected_modulus'] = self.expected_modulus
        if self.printed_constant is not None:
            document['printed_constant'] = [self.printed_constant.real, self.printed_constant.imag]
        return document


def _ratios(numerators, denominators, samples):
    ratios, skipped = [], []
    for numerator, denominator, sample in zip(numerators, denominators, samples):
        if abs(denominator) < _DEGENERATE_MODULUS:
            skipped.append(sample)
            continue
        ratios.append(numerator / denominator)
    if skipped:
        _logger.warning('Skipped {} samples where the reference function vanishes: {}', len(skipped), skipped)
    return ratios, skipped


def t_alpha_constant(n, alpha, w_samples, pullback=Pullback.INVERSE):
    """
    The constant c in T_alpha(Psi_n^alpha)(w) = c w^n, measured over disc samples. Under the inverse pullback
    c = (-1)^{alpha+1} for integer alpha; samples at w = 0 are skipped for n > 0.

    :type n: int
    :type alpha: float
    :type w_samples: list[complex]
    :type pullback: Pullback
    :rtype: ProportionalityReport
    """
    samples = np.asarray(w_samples, dtype=complex)
    values = np.atleast_1d(t_alpha_map(lambda z: psi_basis(n, alpha, z), alpha, samples, pullback))
    ratios, skipped = _ratios(values, samples ** n, list(samples))
    return ProportionalityReport(ratios, skipped, expected_modulus=1.0)


def bergman_psi_ratio(order, z_samples, quadrature_order=None):
    """
    Ber^alpha(S_n^{2 alpha})(z) / Psi_n^{2 alpha}(z) over half-plane samples, where S_n^{2 alpha} is the signal whose
    spectrum is l_n^{2 alpha}. The ratio is the constant Gamma(n + 2 alpha + 1)/n! (-1)^{2 alpha + 1} (principal power);
    the printed form (-1)^{alpha+1} (2 alpha + n)!/n! agrees in modulus only, and a differing phase is logged.

    :type order: app.special.wavelet_order.WaveletOrder
    :type z_samples: list[complex]
    :type quadrature_order: int | None
    :rtype: ProportionalityReport
    """
    n, alpha = order.n, order.alpha
    samples = np.asarray(z_samples, dtype=complex)
    signal = SpectralSignal.from_laguerre_function(n, 2 * alpha)
    transforms = np.atleast_1d(bergman_transform(signal, alpha, samples, quadrature_order))
    references = np.atleast_1d(psi_basis(n, 2 * alpha, samples))
    ratios, skipped = _ratios(transforms, references, list(samples))

    expected_modulus = gamma_ratio(n + 2 * alpha + 1, n + 1)
    printed_constant = complex(principal_power(-1.0 + 0j, alpha + 1)) * expected_modulus
    report = ProportionalityReport(ratios, skipped, expected_modulus, printed_constant)
    if abs(report.ratio_mean - printed_constant) > 1e-6 * expected_modulus:
        _logger.notice('Measured constant {} differs from the printed constant {} for n={}, alpha={} (phase {:.6f}).',
                       report.ratio_mean, printed_constant, n, alpha, report.phase)
    return report
