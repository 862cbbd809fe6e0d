"""
The invariant suites behind the verify command. Each suite measures a set of checks, scales each by its tolerance
factor and passes when the worst scaled value is strictly below the suite tolerance (so a tolerance of 0 always
fails). Some suites add conditions that are not tolerances, such as an error that must shrink on a larger strip.
"""
import math
import time

import numpy as np

from app.frames.frame_analysis import FrameAnalysisConfig, condition_number, frame_bounds
from app.geometry.density import lattice_density
from app.geometry.point_sequence import HyperbolicLattice
from app.quadrature.gauss_laguerre import gauss_laguerre_rule
from app.special.circular_jacobi import circular_jacobi, circular_jacobi_series
from app.special.laguerre import (laguerre_norm_sq, laguerre_polynomial, laguerre_polynomial_values,
                                  laguerre_series, laguerre_series_magnitude)
from app.special.rational_jacobi import s_eval, s_eval_via_disc
from app.special.wavelet_order import WaveletOrder
from app.transforms.admissibility import admissibility_constant, derivative_relation_residual, isometry_residual
from app.transforms.disc_map import Pullback, bergman_psi_ratio, t_alpha_constant
from app.transforms.spectral_signal import SpectralSignal
from app.transforms.time_scale_point import TimeScalePoint
from app.transforms.wavelet_transform import wavelet_coefficient, wavelet_coefficient_via_formula
from app.transforms.windows import LaguerreWindow
from app.util import log
from app.util.exceptions import ParameterDomainError


_SAMPLE_SEED = 20170915


class Check(object):
    """
    One measured quantity. The value is compared with factor times the suite tolerance.
    """

    def __init__(self, name, value, factor=1.0):
        self.name = name
        self.value = float(value)
        self.factor = factor

    @property
    def scaled(self):
        return self.value / self.factor


class SuiteResult(object):

    def __init__(self, name, checks, tolerance, conditions=None, runtime=0.0, notes=None):
        """
        :type name: str
        :type checks: list[Check]
        :type tolerance: float
        :param conditions: named boolean conditions that must all hold
        :type conditions: dict[str, bool] | None
        :type runtime: float
        :type notes: dict | None
        """
        self.name = name
        self.checks = checks
        self.tolerance = tolerance
        self.conditions = dict(conditions or {})
        self.runtime = runtime
        self.notes = dict(notes or {})

    @property
    def measured(self):
        """
        The worst scaled check value.

        :rtype: float
        """
        values = [check.scaled for check in self.checks]
        if any(math.isnan(value) for value in values):
            return math.nan
        return max(values) if values else 0.0

    @property
    def passed(self):
        measured = self.measured
        return (not math.isnan(measured)) and measured < self.tolerance and all(self.conditions.values())

    def to_dict(self):
        return {
            'suite': self.name,
            'passed': self.passed,
            'measured': self.measured,
            'tolerance': self.tolerance,
            'checks': {check.name: check.value for check in self.checks},
            'conditions': self.conditions,
            'runtime_seconds': self.runtime,
            'notes': self.notes,
        }


class InvariantSuite(object):
    """
    Base class for suites. Subclasses set name, description and default_tolerance and implement _measure().
    """
    name = None
    description = None
    default_tolerance = None

    def __init__(self):
        self._logger = log.get_logger(__name__)
        self._conditions = {}
        self._notes = {}

    def run(self, tolerance=None):
        """
        :param tolerance: overrides the suite's default tolerance
        :type tolerance: float | None
        :rtype: SuiteResult
        """
        tolerance = self.default_tolerance if tolerance is None else tolerance
        self._conditions, self._notes = {}, {}
        start = time.time()
        checks = self._measure()
        result = SuiteResult(self.name, checks, tolerance, self._conditions, time.time() - start, self._notes)
        self._logger.debug('Suite {} measured {} against {} in {:.2f}s', self.name, result.measured, tolerance,
                           result.runtime)
        return result

    def _measure(self):
        """
        :rtype: list[Check]
        """
        raise NotImplementedError


def _relative_to_peak(values, reference):
    values, reference = np.asarray(values), np.asarray(reference)
    peak = np.max(np.abs(reference))
    if peak == 0:
        return float(np.max(np.abs(values)))
    return float(np.max(np.abs(values - reference)) / peak)


class SpecialFunctionSuite(InvariantSuite):
    name = 'special'
    description = 'S_n^alpha routes agree; circular Jacobi recurrence matches its closed form; Laguerre recurrence ' \
                  'matches its exact series'
    default_tolerance = 1e-10

    def _measure(self):
        t = np.linspace(-20, 20, 401)
        s_error = 0.0
        for alpha in (0.5, 1.0, 2.0, 3.0):
            for n in range(11):
                order = WaveletOrder(n, alpha)
                s_error = max(s_error, _relative_to_peak(s_eval(order, t), s_eval_via_disc(order, t)))

        radii = np.array([0.0, 0.25, 0.5, 0.75, 1.0])
        angles = np.linspace(0, 2 * math.pi, 16, endpoint=False)
        disc_samples = (radii[:, np.newaxis] * np.exp(1j * angles)[np.newaxis, :]).reshape(-1)
        jacobi_error = 0.0
        for alpha in (0.0, 0.5, 1.0, 2.0, 3.0):
            for n in range(11):
                order = WaveletOrder(n, alpha)
                jacobi_error = max(jacobi_error, _relative_to_peak(circular_jacobi(order, disc_samples),
                                                                   circular_jacobi_series(order, disc_samples)))

        laguerre_error = 0.0
        for alpha in (0.0, 0.5, 2.0):
            for n in range(13):
                order = WaveletOrder(n, alpha)
                for x in (0.5, 2.0, 7.0, 15.0):
                    difference = abs(laguerre_polynomial(order, x) - laguerre_series(order, x))
                    laguerre_error = max(laguerre_error, difference / laguerre_series_magnitude(order, x))
        return [Check('s_eval_routes', s_error), Check('circular_jacobi_series', jacobi_error),
                Check('laguerre_series', laguerre_error)]


class LaguerreOrthogonalitySuite(InvariantSuite):
    name = 'laguerre'
    description = 'Gram matrix of l_0..l_12 is diag(Gamma(n+alpha+1)/n!)'
    default_tolerance = 1e-8

    def _measure(self):
        off_diagonal = diagonal = 0.0
        for alpha in (0.0, 1.0, 2.0):
            rule = gauss_laguerre_rule(200, alpha)
            values = laguerre_polynomial_values(12, alpha, rule.nodes)
            gram = (values * rule.weights) @ values.T
            expected = np.array([laguerre_norm_sq(WaveletOrder(n, alpha)) for n in range(13)])
            diagonal = max(diagonal, float(np.max(np.abs(np.diag(gram) - expected) / expected)))
            off_diagonal = max(off_diagonal, float(np.max(np.abs(gram - np.diag(np.diag(gram))))))
        return [Check('off_diagonal', off_diagonal), Check('diagonal', diagonal)]


def circle_gram_matrix(alpha, n_max, points=4096):
    """
    integral_0^{2 pi} g_m(e^{i theta}) conj(g_n(e^{i theta})) sin^alpha(theta/2) d theta for m, n <= n_max, by the
    trapezoid rule in v with theta = 2 pi v - sin(2 pi v). The substitution flattens the weight at theta = 0, where
    its periodic extension has a kink for odd alpha.

    :type alpha: float
    :type n_max: int
    :type points: int
    :rtype: numpy.ndarray
    """
    v = np.arange(points) / points
    theta = 2 * math.pi * v - np.sin(2 * math.pi * v)
    jacobian = 4 * math.pi * np.sin(math.pi * v) ** 2
    weight = np.sin(theta / 2) ** alpha * jacobian / points
    circle = np.exp(1j * theta)
    values = np.array([circular_jacobi(WaveletOrder(n, alpha), circle) for n in range(n_max + 1)])
    return (values * weight) @ values.conj().T


class CircleOrthogonalitySuite(InvariantSuite):
    name = 'circle'
    description = 'circular Jacobi polynomials are orthogonal against sin^alpha(theta/2) on the circle'
    default_tolerance = 1e-8

    def _measure(self):
        worst = 0.0
        for alpha in (1.0, 2.0):
            gram = circle_gram_matrix(alpha, 6)
            worst = max(worst, float(np.max(np.abs(gram - np.diag(np.diag(gram))))))
            self._conditions['positive_diagonal_alpha_{:g}'.format(alpha)] = bool(np.all(np.diag(gram).real > 0))
        return [Check('off_diagonal', worst)]


def _test_signal(basis_alpha):
    return SpectralSignal(basis_alpha, [1.0, 0.5 - 0.25j, 0.3j, -0.2])


class ReconstructionFormulaSuite(InvariantSuite):
    name = 'decomposition'
    description = 'the wavelet transform equals its expansion in Bergman transforms'
    default_tolerance = 1e-8

    def _measure(self):
        random = np.random.RandomState(_SAMPLE_SEED)
        points = [TimeScalePoint(x, s) for x, s in zip(random.uniform(-5, 5, 25), random.uniform(0.2, 5, 25))]
        worst = 0.0
        for alpha in (2.0, 4.0):
            signal = _test_signal(alpha)
            for n in range(4):
                order = WaveletOrder(n, alpha)
                floor = 1e-3 * math.sqrt(signal.norm_sq() * LaguerreWindow(order).norm_sq())
                for point in points:
                    direct = wavelet_coefficient(signal, order, point)
                    via_formula = wavelet_coefficient_via_formula(signal, order, point)
                    worst = max(worst, abs(direct - via_formula) / max(abs(direct), floor))
        return [Check('formula_vs_direct', worst)]


class ProportionalitySuite(InvariantSuite):
    name = 'proportionality'
    description = 'Ber^alpha(S_n^{2 alpha}) / Psi_n^{2 alpha} is constant with modulus Gamma(2 alpha + n + 1)/n!'
    default_tolerance = 1e-6

    def _measure(self):
        random = np.random.RandomState(_SAMPLE_SEED + 1)
        samples = list(random.uniform(-3, 3, 20) + 1j * random.uniform(0.2, 3, 20))
        spread = modulus = 0.0
        phases = {}
        for double_alpha in (1, 2, 3, 4):
            for n in range(6):
                report = bergman_psi_ratio(WaveletOrder(n, double_alpha / 2), samples)
                spread = max(spread, report.ratio_spread)
                modulus = max(modulus, report.modulus_error())
                phases['n={},alpha={:g}'.format(n, double_alpha / 2)] = report.phase
        self._notes['phases'] = phases

        disc_samples = [0.3, -0.5j, 0.2 + 0.6j, -0.7 + 0.1j]
        pullback = max(t_alpha_constant(n, alpha, disc_samples, Pullback.INVERSE).modulus_error()
                       for n in range(4) for alpha in (1.0, 2.0))
        return [Check('ratio_spread', spread), Check('modulus', modulus), Check('pullback_modulus', pullback)]


class IsometrySuite(InvariantSuite):
    name = 'isometry'
    description = 'K = 2 for (n=0, alpha=2) and the truncated isometry integral matches K ||f||^2'
    default_tolerance = 1e-2

    def __init__(self, worker_pool=None):
        super().__init__()
        self._worker_pool = worker_pool

    def _measure(self):
        order = WaveletOrder(0, 2)
        signal = SpectralSignal.basis_element(0, 2)
        constant = admissibility_constant(order)
        strip = isometry_residual(signal, order, (-40, 40), (1e-3, 1e3), 2001, 400, worker_pool=self._worker_pool)
        doubled = isometry_residual(signal, order, (-80, 80), (5e-4, 2e3), 4001, 440, worker_pool=self._worker_pool)
        self._conditions['error_decreases_on_doubled_strip'] = doubled.rel_err < strip.rel_err
        self._notes.update({'strip': strip.to_dict(), 'doubled_strip': doubled.to_dict()})
        return [Check('admissibility_constant', abs(constant - 2) / 2, factor=1e-8), Check('isometry', strip.rel_err)]


class DerivativeRelationSuite(InvariantSuite):
    name = 'derivative'
    description = '(d/dz)^k Ber^{alpha/2} f = i^k Ber^{k + alpha/2} f by central differences'
    default_tolerance = 1e-5

    def _measure(self):
        signal = SpectralSignal.basis_element(0, 2)
        checks = []
        for k in (1, 2, 3):
            residual = derivative_relation_residual(signal, 1.0, 1j, k)
            checks.append(Check('k={}'.format(k), residual, factor=1.0 if k == 1 else 10.0))
        return checks


class DensitySuite(InvariantSuite):
    name = 'density'
    description = 'lower density of a = 2 lattices is near 2 pi/(b log a) and doubles when b is halved'
    default_tolerance = 0.1

    def __init__(self, worker_pool=None):
        super().__init__()
        self._worker_pool = worker_pool

    def _measure(self):
        b = 2 * math.pi / (8 * math.log(2))
        coarse = lattice_density(HyperbolicLattice(2, b, (0, 0), (0, 0)), 0.99, worker_pool=self._worker_pool)
        fine = lattice_density(HyperbolicLattice(2, b / 2, (0, 0), (0, 0)), 0.99, worker_pool=self._worker_pool)
        self._notes.update({'coarse': coarse.to_dict(), 'fine': fine.to_dict()})
        return [Check('formula', abs(coarse.relative_to_theory() - 1)),
                Check('halving_b', abs(fine.estimate / coarse.estimate - 2) / 2)]


class ThresholdSuite(InvariantSuite):
    name = 'threshold'
    description = 'frame lower bounds hold inside the lattice threshold and degrade outside it'
    default_tolerance = 0.2

    def __init__(self, worker_pool=None):
        super().__init__()
        self._worker_pool = worker_pool

    def _schedule(self, b_log_a):
        lattice = HyperbolicLattice(2, b_log_a / math.log(2), (-4, 4), (-8, 8))
        cfg = FrameAnalysisConfig(WaveletOrder(0, 2), lattice, m_schedule=[8, 16, 32])
        return frame_bounds(cfg, self._worker_pool).schedule

    def _measure(self):
        inside = self._schedule(math.pi / 2)
        outside = self._schedule(4 * math.pi)
        inside_a = [a_est for _, a_est, _ in inside]
        outside_a = [a_est for _, a_est, _ in outside]
        outside_conditioning = [condition_number(a_est, b_est) for _, a_est, b_est in outside]
        self._conditions.update({
            'inside_positive': min(inside_a) > 0,
            'outside_decreasing': all(later < earlier for earlier, later in zip(outside_a, outside_a[1:])),
            'outside_conditioning_grows_5x': outside_conditioning[-1] >= 5 * outside_conditioning[0],
        })
        self._notes.update({'inside': inside, 'outside': outside})
        variation = (max(inside_a) - min(inside_a)) / max(inside_a) if max(inside_a) > 0 else math.inf
        return [Check('inside_variation', variation)]


DEFAULT_SUITES = ['special', 'laguerre', 'circle', 'decomposition', 'proportionality', 'isometry', 'derivative',
                  'density']
OPTIONAL_SUITES = ['threshold']

_SUITE_CLASSES = {suite.name: suite for suite in (
    SpecialFunctionSuite, LaguerreOrthogonalitySuite, CircleOrthogonalitySuite, ReconstructionFormulaSuite,
    ProportionalitySuite, IsometrySuite, DerivativeRelationSuite, DensitySuite, ThresholdSuite)}
_POOLED_SUITES = {'isometry', 'density', 'threshold'}


def make_suite(name, worker_pool=None):
    """
    :type name: str
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :rtype: InvariantSuite
    """
    if name not in _SUITE_CLASSES:
        raise ParameterDomainError('Unknown suite "{}"; expected one of {}.'.format(
            name, ', '.join(DEFAULT_SUITES + OPTIONAL_SUITES)))
    suite_class = _SUITE_CLASSES[name]
    return suite_class(worker_pool) if name in _POOLED_SUITES else suite_class()


def run_suites(names=None, tolerance=None, worker_pool=None):
    """
    Run the named suites (the default set when names is empty) in the given order.

    :type names: list[str] | None
    :param tolerance: overrides every suite's tolerance
    :type tolerance: float | None
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :rtype: list[SuiteResult]
    """
    suites = [make_suite(name, worker_pool) for name in (names or DEFAULT_SUITES)]
    return [suite.run(tolerance) for suite in suites]
