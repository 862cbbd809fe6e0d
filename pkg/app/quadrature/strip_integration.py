import math

import numpy as np

from app.util.exceptions import ParameterDomainError
from app.util.util import scalar_or_array


def _trapezoid_weights(count, step):
    weights = np.full(count, step)
    weights[0] = weights[-1] = step / 2
    return weights


def strip_grid(x_range, s_range, nx, ns):
    """
    The nodes of ``integrate_strip_2d``: nx equispaced x values and ns scales equispaced in log s.

    :type x_range: (float, float)
    :type s_range: (float, float)
    :type nx: int
    :type ns: int
    :rtype: (numpy.ndarray, numpy.ndarray)
    """
    x_min, x_max = x_range
    s_min, s_max = s_range
    if not (math.isfinite(x_min) and math.isfinite(x_max) and x_max > x_min):
        raise ParameterDomainError('The x range must be a finite, non-empty interval (got {}).'.format(x_range))
    if not (0 < s_min < s_max and math.isfinite(s_max)):
        raise ParameterDomainError('The scale range must satisfy 0 < s_min < s_max < inf (got {}).'.format(s_range))
    if nx < 2 or ns < 2:
        raise ParameterDomainError('Both resolutions must be at least 2 (got nx={}, ns={}).'.format(nx, ns))
    return np.linspace(x_min, x_max, nx), np.exp(np.linspace(math.log(s_min), math.log(s_max), ns))


def integrate_strip_2d(integrand, x_range, s_range, nx, ns, worker_pool=None):
    """
    Composite trapezoid rule for integral integral f(x, s) dx ds over a rectangle: trapezoid in x and trapezoid in
    sigma = log s, with the Jacobian ds = s d sigma.

    The integrand is called once per scale with the full x array and a scalar s, so it can vectorize over x. Rows
    may be evaluated by a worker pool; they are always summed in row order.

    :param integrand: callable (x_array, s) -> array of values
    :type integrand: callable
    :type x_range: (float, float)
    :type s_range: (float, float)
    :type nx: int
    :type ns: int
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :rtype: complex | float
    """
    xs, scales = strip_grid(x_range, s_range, nx, ns)
    x_weights = _trapezoid_weights(nx, (xs[-1] - xs[0]) / (nx - 1))
    log_step = (math.log(scales[-1]) - math.log(scales[0])) / (ns - 1)
    scale_weights = _trapezoid_weights(ns, log_step) * scales

    def row_integral(scale):
        return np.sum(x_weights * np.asarray(integrand(xs, scale)))

    if worker_pool is None:
        rows = [row_integral(scale) for scale in scales]
    else:
        rows = worker_pool.map(row_integral, list(scales))

    total = 0.0
    for weight, row in zip(scale_weights, rows):
        total += weight * row
    return scalar_or_array(total)
