"""
Generalized Gauss-Laguerre rules for the weight x^beta e^{-x} on (0, inf) and the integration drivers built on them.

Integrands are always supplied pre-factored: ``integrate_halfline(g, rule)`` returns sum_i w_i g(x_i), the rule's
approximation of integral_0^inf x^beta e^{-x} g(x) dx.
"""
from functools import lru_cache
import math

import numpy as np

from app.quadrature.tridiagonal_eigensolver import tridiagonal_eigenvalues
from app.special.gamma import log_gamma
from app.util import log
from app.util.exceptions import ConfigurationError, ParameterDomainError
from app.util.util import scalar_or_array


DEFAULT_QUADRATURE_ORDER = 80

_RESCALE_THRESHOLD = 1e100
_LOG_RESCALE = math.log(_RESCALE_THRESHOLD)

_logger = log.get_logger(__name__)


class QuadratureRule(object):
    """
    An immutable m-point rule: ascending positive nodes, positive weights and the weight exponent beta.
    """

    def __init__(self, nodes, weights, weight_exponent):
        """
        :type nodes: numpy.ndarray
        :type weights: numpy.ndarray
        :type weight_exponent: float
        """
        self._nodes = np.array(nodes, dtype=float)
        self._weights = np.array(weights, dtype=float)
        self._nodes.setflags(write=False)
        self._weights.setflags(write=False)
        self._weight_exponent = float(weight_exponent)

    @property
    def nodes(self):
        """
        :rtype: numpy.ndarray
        """
        return self._nodes

    @property
    def weights(self):
        """
        :rtype: numpy.ndarray
        """
        return self._weights

    @property
    def weight_exponent(self):
        """
        :rtype: float
        """
        return self._weight_exponent

    @property
    def order(self):
        """
        :rtype: int
        """
        return len(self._nodes)

    def __repr__(self):
        return 'QuadratureRule(order={}, weight_exponent={})'.format(self.order, self._weight_exponent)


def gauss_laguerre_rule(m, beta):
    """
    The m-point rule for x^beta e^{-x}. Rules are cached per (m, beta) and shared between callers.

    :type m: int
    :type beta: float
    :rtype: QuadratureRule
    """
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ParameterDomainError('A quadrature rule needs at least one node (got m={}).'.format(m))
    if not beta > -1:
        raise ParameterDomainError('The Laguerre weight exponent beta must be > -1 (got {}).'.format(beta))
    return _build_rule(int(m), float(beta))


@lru_cache(maxsize=None)
def _build_rule(m, beta):
    """
    Golub-Welsch: the nodes are the eigenvalues of the Jacobi matrix with diagonal 2k+beta+1 and off-diagonal
    sqrt(k(k+beta)). Weights come from the orthonormal recurrence, w_i = Gamma(beta+1) / sum_k p_k(x_i)^2, which keeps
    full relative accuracy for the tiny weights at large nodes.
    """
    diagonal = [2 * k + beta + 1 for k in range(m)]
    off_diagonal = [math.sqrt(k * (k + beta)) for k in range(1, m)]
    nodes, _ = tridiagonal_eigenvalues(diagonal, off_diagonal)
    nodes = np.array(nodes)
    weights = _christoffel_weights(nodes, diagonal, off_diagonal, beta)
    _logger.debug('Built the {}-point Gauss-Laguerre rule for beta={}.', m, beta)
    return QuadratureRule(nodes, weights, beta)


def _christoffel_weights(nodes, diagonal, off_diagonal, beta):
    previous = np.zeros_like(nodes)
    current = np.ones_like(nodes)
    total = np.ones_like(nodes)
    log_scale = np.zeros_like(nodes)
    for k in range(len(nodes) - 1):
        coupling_below = off_diagonal[k - 1] if k > 0 else 0.0
        following = ((nodes - diagonal[k]) * current - coupling_below * previous) / off_diagonal[k]
        previous, current = current, following
        total += current ** 2
        # keep the running values representable; the true sum is total * exp(2 * log_scale)
        large = np.abs(current) > _RESCALE_THRESHOLD
        if np.any(large):
            previous[large] /= _RESCALE_THRESHOLD
            current[large] /= _RESCALE_THRESHOLD
            total[large] /= _RESCALE_THRESHOLD ** 2
            log_scale[large] += _LOG_RESCALE
    return np.exp(log_gamma(beta + 1) - np.log(total) - 2 * log_scale)


def integrate_halfline(integrand, rule):
    """
    sum_i w_i g(x_i) for a pre-factored integrand g, approximating integral_0^inf x^beta e^{-x} g(x) dx.

    :param integrand: vectorized callable mapping the node array to values
    :type integrand: callable
    :type rule: QuadratureRule
    :rtype: complex | float
    """
    values = np.asarray(integrand(rule.nodes))
    return scalar_or_array(np.sum(rule.weights * values))


def required_order(degree):
    """
    The smallest rule order allowed for integrands t^c e^{-lambda t} P(t) with deg P = degree. The rule is exact
    for deg P <= 2m - 1; orders below 80 are never used.

    :type degree: int
    :rtype: int
    """
    return max(DEFAULT_QUADRATURE_ORDER, (int(degree) + 2) // 2)


def check_order(quadrature_order, degree):
    """
    :type quadrature_order: int
    :type degree: int
    """
    needed = required_order(degree)
    if quadrature_order < needed:
        raise ConfigurationError('Quadrature order {} is below the budget {} for polynomial degree {}.'
                                 .format(quadrature_order, needed, degree))


def laplace_integral(polynomial, exponent, rate, order=DEFAULT_QUADRATURE_ORDER):
    """
    integral_0^inf t^c e^{-lambda t} P(t) dt for a polynomial P and Re lambda > 0.

    The substitution u = lambda t is taken along the complex direction of lambda; the integrand decays in the
    whole sector between the real axis and that direction, so
        integral = lambda^{-c-1} sum_i w_i P(u_i / lambda)
    with the real rule of exponent c, exactly whenever deg P <= 2m - 1.

    :param polynomial: vectorized callable evaluating P on an array of complex points; it receives an array of
        shape shape(rate) + (m,) and returns values whose trailing axes broadcast against it (leading axes, such as
        one per basis element, are kept in the result)
    :type polynomial: callable
    :param exponent: c > -1
    :type exponent: float
    :param rate: lambda, scalar or array, every entry with positive real part
    :type rate: complex | numpy.ndarray
    :type order: int
    :rtype: complex | numpy.ndarray
    """
    rate = np.asarray(rate, dtype=complex)
    if np.any(rate.real <= 0):
        raise ParameterDomainError('The decay rate of a Laplace-type integral must have a positive real part.')
    rule = gauss_laguerre_rule(order, exponent)
    points = rule.nodes / rate[..., np.newaxis]
    values = np.asarray(polynomial(points))
    weighted = np.sum(rule.weights * values, axis=-1)
    return scalar_or_array(np.exp((-exponent - 1) * np.log(rate)) * weighted)
