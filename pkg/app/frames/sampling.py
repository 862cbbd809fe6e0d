"""
Sampling ratios in the Bergman space A_alpha of the upper half-plane, with norm

    ||F||^2 = integral integral |F(x + iy)|^2 y^{alpha-2} dx dy,

and the check that links them to frame sums of the Paul wavelet.
"""
import math

import numpy as np

from app.geometry.point_sequence import HyperbolicLattice, generate_lattice
from app.quadrature.strip_integration import integrate_strip_2d
from app.special.gamma import log_gamma
from app.transforms.disc_map import psi_basis
from app.transforms.paul import PaulWindow
from app.transforms.wavelet_transform import basis_coefficient_rows
from app.util import log
from app.util.exceptions import DegenerateInputError, ParameterDomainError


DEGENERATE_NORM = 1e-12
EQUIVALENCE_TOLERANCE = 0.05

_logger = log.get_logger(__name__)


class PsiCombination(object):
    """
    F(z) = sum_m c_m Psi_m^gamma(z). Since |Psi_m^gamma| <= |Psi_0^gamma| on the half-plane,
    |F|^2 <= (sum |c_m|)^2 |Psi_0^gamma|^2, which bounds the truncated tail of the Bergman norm.
    """

    def __init__(self, psi_alpha, coefficients):
        """
        :type psi_alpha: float
        :type coefficients: list[complex]
        """
        coefficients = np.array(coefficients, dtype=complex).reshape(-1)
        if coefficients.size == 0 or not np.all(np.isfinite(coefficients)):
            raise ParameterDomainError('A Psi combination needs finitely many finite coefficients.')
        self.psi_alpha = float(psi_alpha)
        self.coefficients = coefficients

    def __call__(self, z):
        """
        :type z: complex | numpy.ndarray
        :rtype: complex | numpy.ndarray
        """
        z = np.asarray(z, dtype=complex)
        total = np.zeros(z.shape, dtype=complex)
        for m, coefficient in enumerate(self.coefficients):
            if coefficient:
                total = total + coefficient * np.asarray(psi_basis(m, self.psi_alpha, z))
        return total

    def scaled(self, factor):
        """
        :rtype: PsiCombination
        """
        return PsiCombination(self.psi_alpha, factor * self.coefficients)

    def envelope_factor(self):
        """
        (sum |c_m|)^2.

        :rtype: float
        """
        return float(np.sum(np.abs(self.coefficients))) ** 2


def psi0_norm_sq(psi_alpha, bergman_alpha):
    """
    The A_alpha norm of Psi_0^gamma, from |Psi_0^gamma(x+iy)|^2 = (x^2 + (y+1/2)^2)^{-gamma-1}:

        sqrt(pi) Gamma(gamma+1/2)/Gamma(gamma+1)
            * 2^{2gamma+2-alpha} Gamma(alpha-1) Gamma(2gamma+2-alpha)/Gamma(2gamma+1),

    finite for alpha > 1 and 2 gamma + 2 > alpha.

    :type psi_alpha: float
    :type bergman_alpha: float
    :rtype: float
    """
    gamma, alpha = psi_alpha, bergman_alpha
    if not (alpha > 1 and 2 * gamma + 2 > alpha and gamma > -0.5):
        raise ParameterDomainError('Psi_0^{} has no finite A_{} norm.'.format(gamma, alpha))
    log_value = (0.5 * math.log(math.pi) + log_gamma(gamma + 0.5) - log_gamma(gamma + 1)
                 + (2 * gamma + 2 - alpha) * math.log(2) + log_gamma(alpha - 1) + log_gamma(2 * gamma + 2 - alpha)
                 - log_gamma(2 * gamma + 1))
    return math.exp(log_value)


class BergmanNormQuadrature(object):
    """
    The truncated rectangle [-x_max, x_max] x [y_min, y_max] and its resolution (trapezoid in x and in log y).
    """

    def __init__(self, x_max=100.0, y_range=(1e-4, 1e4), nx=4001, ny=400):
        self.x_range = (-float(x_max), float(x_max))
        self.y_range = (float(y_range[0]), float(y_range[1]))
        self.nx = int(nx)
        self.ny = int(ny)

    def integrate(self, function, bergman_alpha, worker_pool=None):
        """
        :type function: callable
        :type bergman_alpha: float
        :rtype: float
        """
        def density(xs, y):
            return np.abs(np.asarray(function(xs + 1j * y))) ** 2 * y ** (bergman_alpha - 2)

        return float(np.real(integrate_strip_2d(density, self.x_range, self.y_range, self.nx, self.ny,
                                                worker_pool)))

    def to_dict(self):
        return {'x_range': list(self.x_range), 'y_range': list(self.y_range), 'nx': self.nx, 'ny': self.ny}


def bergman_norm_sq(test_fn, bergman_alpha, norm_quadrature=None, worker_pool=None):
    """
    The truncated A_alpha norm of a Psi combination and a bound on the part outside the rectangle.

    :type test_fn: PsiCombination
    :type bergman_alpha: float
    :type norm_quadrature: BergmanNormQuadrature | None
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :return: (norm_sq, tail_bound)
    :rtype: (float, float)
    """
    quadrature = norm_quadrature or BergmanNormQuadrature()
    exact_envelope = psi0_norm_sq(test_fn.psi_alpha, bergman_alpha)
    norm_sq = quadrature.integrate(test_fn, bergman_alpha, worker_pool)
    envelope = quadrature.integrate(PsiCombination(test_fn.psi_alpha, [1.0]), bergman_alpha, worker_pool)
    tail_bound = test_fn.envelope_factor() * max(exact_envelope - envelope, 0.0)
    return norm_sq, tail_bound


class SamplingRatio(object):
    """
    sum_j |F(z_j)|^2 y_j^alpha / ||F||^2 together with the pieces it was formed from.
    """

    def __init__(self, sample_sum, norm_sq, tail_bound, point_count):
        self.sample_sum = float(sample_sum)
        self.norm_sq = float(norm_sq)
        self.tail_bound = float(tail_bound)
        self.point_count = point_count

    @property
    def ratio(self):
        return self.sample_sum / self.norm_sq

    def __float__(self):
        return self.ratio

    def to_dict(self):
        return {'ratio': self.ratio, 'sample_sum': self.sample_sum, 'norm_sq': self.norm_sq,
                'tail_bound': self.tail_bound, 'points': self.point_count}


def _halfplane_points(sequence):
    if isinstance(sequence, HyperbolicLattice):
        sequence = generate_lattice(sequence)
    return sequence.to_halfplane().points


def sampling_ratio(sequence, bergman_alpha, test_fn, norm_quadrature=None, worker_pool=None):
    """
    :type sequence: app.geometry.point_sequence.PointSequence | HyperbolicLattice
    :type bergman_alpha: float
    :type test_fn: PsiCombination
    :type norm_quadrature: BergmanNormQuadrature | None
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :rtype: SamplingRatio
    """
    if not bergman_alpha > 1:
        raise ParameterDomainError('Sampling ratios need a Bergman weight alpha > 1 (got {}).'.format(bergman_alpha))
    norm_sq, tail_bound = bergman_norm_sq(test_fn, bergman_alpha, norm_quadrature, worker_pool)
    if norm_sq < DEGENERATE_NORM:
        raise DegenerateInputError('The test function has Bergman norm {} below {}.'.format(norm_sq,
                                                                                            DEGENERATE_NORM))
    points = _halfplane_points(sequence)
    values = np.asarray(test_fn(points)) if len(points) else np.zeros(0)
    sample_sum = float(np.sum(np.abs(values) ** 2 * points.imag ** bergman_alpha))
    result = SamplingRatio(sample_sum, norm_sq, tail_bound, len(points))
    _logger.debug('Sampling ratio over {} points: {} (tail bound {})', len(points), result.ratio, tail_bound)
    return result


class EquivalenceReport(object):
    """
    A Paul-window frame ratio next to the sampling ratio of the matching Bergman function, scaled by 2 pi K.
    """

    def __init__(self, frame_ratio, sampling, scale):
        self.frame_ratio = float(frame_ratio)
        self.sampling = sampling
        self.scale = float(scale)

    @property
    def scaled_sampling_ratio(self):
        return self.sampling.ratio * self.scale

    @property
    def rel_diff(self):
        if self.frame_ratio == 0:
            return 0.0 if self.scaled_sampling_ratio == 0 else math.inf
        return abs(self.frame_ratio - self.scaled_sampling_ratio) / self.frame_ratio

    def passed(self, tolerance=EQUIVALENCE_TOLERANCE):
        return self.rel_diff <= tolerance

    def to_dict(self):
        return {'frame_ratio': self.frame_ratio, 'scaled_sampling_ratio': self.scaled_sampling_ratio,
                'scale': self.scale, 'rel_diff': self.rel_diff, 'sampling': self.sampling.to_dict()}


def equivalence_check(alpha, sequence, norm_quadrature=None, quadrature_order=None, worker_pool=None):
    """
    For f = e_0 of parameter 2 alpha, compare sum_g |<f, T_x D_s psi_alpha>|^2 / ||f||^2 over the sequence with the
    sampling ratio of F = Psi_0^{2 alpha} in A_{2 alpha + 1}. The Paul transform is a multiple of Ber^alpha f, which
    is itself a multiple of F, and the two ratios differ by the factor 2 pi K of the Paul window.

    :type alpha: float
    :type sequence: app.geometry.point_sequence.PointSequence | HyperbolicLattice
    :type norm_quadrature: BergmanNormQuadrature | None
    :type quadrature_order: int | None
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :rtype: EquivalenceReport
    """
    window = PaulWindow(alpha)
    scale = 2 * math.pi * window.admissibility_constant()
    points = _halfplane_points(sequence)
    rows = basis_coefficient_rows(1, 2 * alpha, window, points.real, points.imag, quadrature_order)
    frame_ratio = float(np.sum(np.abs(rows[:, 0]) ** 2))
    sampling = sampling_ratio(sequence, 2 * alpha + 1, PsiCombination(2 * alpha, [1.0]), norm_quadrature,
                              worker_pool)
    report = EquivalenceReport(frame_ratio, sampling, scale)
    _logger.debug('Frame ratio {} vs scaled sampling ratio {}', frame_ratio, report.scaled_sampling_ratio)
    return report

