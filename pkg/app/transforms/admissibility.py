import math

import numpy as np

from app.quadrature.gauss_laguerre import gauss_laguerre_rule, integrate_halfline
from app.quadrature.strip_integration import integrate_strip_2d
from app.special.laguerre import laguerre_polynomial_values
from app.transforms.wavelet_transform import bergman_transform, window_coefficients
from app.transforms.windows import LaguerreWindow
from app.util import log
from app.util.exceptions import ParameterDomainError, StepSizeError


RICHARDSON_TOLERANCE = 1e-3
# steps balancing truncation against cancellation for the derivative relation of order k
TUNED_STEPS = {1: 1e-3, 2: 1e-3, 3: 2e-3}

_logger = log.get_logger(__name__)


def admissibility_constant(order, quadrature_order=None):
    """
    K = integral |F psi(t)|^2 dt/t for psi = S_n^alpha(./2); substituting u = 2t gives
    K = 2 integral e^{-u} u^{alpha-1} L_n^alpha(u)^2 du, integrated exactly by the rule of exponent alpha - 1.

    :type order: app.special.wavelet_order.WaveletOrder
    :type quadrature_order: int | None
    :rtype: float
    """
    order.require_admissible()
    points = quadrature_order or order.n + 1
    rule = gauss_laguerre_rule(points, order.alpha - 1)
    return 2 * float(integrate_halfline(
        lambda u: laguerre_polynomial_values(order.n, order.alpha, u)[order.n] ** 2, rule))


class IsometryResidual(object):
    """
    lhs = (1/4pi) integral integral s^{-2} |W f(x, s)|^2 dx ds over a truncated strip, rhs = K ||f||^2.
    """

    def __init__(self, lhs, rhs):
        self.lhs = float(lhs)
        self.rhs = float(rhs)

    @property
    def rel_err(self):
        if self.rhs == 0:
            return 0.0 if self.lhs == 0 else math.inf
        return abs(self.lhs - self.rhs) / self.rhs

    def to_dict(self):
        return {'lhs': self.lhs, 'rhs': self.rhs, 'rel_err': self.rel_err}


def isometry_residual(signal, order, x_range, s_range, nx, ns, quadrature_order=None, worker_pool=None):
    """
    Check integral integral s^{-2} |W f|^2 dx ds = 4 pi K ||f||^2 on the strip x_range x s_range. The factor 4 pi
    collects 2 pi from Plancherel in x and 2 from the spectral mass of S_n^alpha(./2).

    :type signal: app.transforms.spectral_signal.SpectralSignal
    :type order: app.special.wavelet_order.WaveletOrder
    :type x_range: (float, float)
    :type s_range: (float, float)
    :type nx: int
    :type ns: int
    :type quadrature_order: int | None
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :rtype: IsometryResidual
    """
    order.require_admissible()
    rhs = admissibility_constant(order) * signal.norm_sq()
    if signal.is_zero():
        return IsometryResidual(0.0, rhs)
    window = LaguerreWindow(order)

    def energy_density(xs, scale):
        coefficients = window_coefficients(signal, window, xs, scale, quadrature_order)
        return np.abs(coefficients) ** 2 / scale ** 2

    total = integrate_strip_2d(energy_density, x_range, s_range, nx, ns, worker_pool)
    lhs = float(np.real(total)) / (4 * math.pi)
    _logger.debug('Isometry on x={} s={}: lhs={} rhs={}', x_range, s_range, lhs, rhs)
    return IsometryResidual(lhs, rhs)


def central_difference(function, z, k, h):
    """
    The k-th central difference along the real direction, sum_j (-1)^j C(k, j) F(z + (k/2 - j) h) / h^k. Odd k
    uses half-step offsets.

    :type function: callable
    :type z: complex
    :type k: int
    :type h: float
    :rtype: complex
    """
    offsets = np.array([(k / 2 - j) * h for j in range(k + 1)])
    weights = np.array([(-1) ** j * math.comb(k, j) for j in range(k + 1)], dtype=float)
    values = np.asarray(function(z + offsets))
    return complex(np.sum(weights * values) / h ** k)


def derivative_relation_residual(signal, alpha, z, k, h=None, quadrature_order=None):
    """
    Relative difference between (d/dz)^k Ber^{alpha/2} f(z), by central differences, and i^k Ber^{k+alpha/2} f(z).

    The difference quotient is also formed at h/2; if the two disagree by more than 1e-3 relative the step is either
    too large or too small and StepSizeError is raised.

    :type signal: app.transforms.spectral_signal.SpectralSignal
    :type alpha: float
    :type z: complex
    :type k: int
    :param h: step; defaults to the tuned step for k
    :type h: float | None
    :type quadrature_order: int | None
    :rtype: float
    """
    if int(k) != k or k < 0:
        raise ParameterDomainError('The derivative order k must be a non-negative integer (got {}).'.format(k))
    if k == 0:
        return 0.0
    h = TUNED_STEPS.get(k, 1e-3) if h is None else h
    if not (h > 0 and z.imag > k * h):
        raise ParameterDomainError('The derivative relation needs h > 0 and Im z > k h (got h={}, z={}).'
                                   .format(h, z))

    def base_transform(points):
        return bergman_transform(signal, alpha / 2, points, quadrature_order)

    target = (1j ** k) * complex(bergman_transform(signal, k + alpha / 2, z, quadrature_order))
    estimate = central_difference(base_transform, z, k, h)
    refined = central_difference(base_transform, z, k, h / 2)
    scale = max(abs(refined), abs(target))
    if scale == 0:
        return 0.0
    if abs(estimate - refined) > RICHARDSON_TOLERANCE * scale:
        raise StepSizeError('Difference quotients at h={} and h/2 disagree ({} vs {}).'.format(h, estimate, refined))
    return abs(estimate - target) / abs(target) if target != 0 else abs(estimate)
