import math

from app.frames.frame_analysis import (EXTENSION_TOLERANCE, MAX_ATOMS, MAX_EXTENSION_LEVELS, FrameAnalysisConfig,
                                       frame_bounds)
from app.geometry.density import density_thresholds
from app.geometry.point_sequence import HyperbolicLattice
from app.util import log
from app.util.exceptions import LwframesError


DEFAULT_J_RANGE = (-4, 4)
DEFAULT_K_RANGE = (-8, 8)
SWEEP_HEADER = ['blog_a', 'density_est', 'threshold', 'inside', 'M', 'a_est', 'b_est']

_logger = log.get_logger(__name__)


class SweepRow(object):
    """
    One row of a threshold sweep. A failed row keeps its lattice coordinates and basis size and carries nan in the
    numeric columns.
    """

    def __init__(self, b_log_a, density_est, threshold, inside, basis_size, a_est, b_est, failed=False):
        self.b_log_a = b_log_a
        self.density_est = density_est
        self.threshold = threshold
        self.inside = inside
        self.basis_size = basis_size
        self.a_est = a_est
        self.b_est = b_est
        self.failed = failed

    @classmethod
    def failed_row(cls, b_log_a, threshold, basis_size):
        return cls(b_log_a, math.nan, threshold, None, basis_size, math.nan, math.nan, failed=True)

    def inside_label(self):
        if self.failed:
            return 'failed'
        return 'inside' if self.inside else 'outside'

    def as_list(self):
        """
        The row in SWEEP_HEADER order.

        :rtype: list
        """
        density = math.nan if self.density_est is None else self.density_est
        return [self.b_log_a, density, self.threshold, self.inside_label(), self.basis_size, self.a_est, self.b_est]


def threshold_sweep(order, lattice_pairs, m_schedule, j_range=DEFAULT_J_RANGE, k_range=DEFAULT_K_RANGE,
                    basis_alpha=None, quadrature_order=None, extend=True, density_radius=0.99, worker_pool=None,
                    extension_tolerance=EXTENSION_TOLERANCE, max_extension_levels=MAX_EXTENSION_LEVELS,
                    max_atoms=MAX_ATOMS):
    """
    Frame bounds for every (a, b) lattice and every basis size in the schedule. A pair that fails (for instance
    a <= 1) produces rows marked failed and the sweep goes on.

    :type order: app.special.wavelet_order.WaveletOrder
    :type lattice_pairs: list[(float, float)]
    :type m_schedule: list[int]
    :type j_range: (int, int)
    :type k_range: (int, int)
    :type basis_alpha: float | None
    :type quadrature_order: int | None
    :type extend: bool
    :type density_radius: float
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :type extension_tolerance: float
    :type max_extension_levels: int
    :type max_atoms: int
    :rtype: list[SweepRow]
    """
    _, threshold = density_thresholds(order)
    rows = []
    for a, b in lattice_pairs:
        try:
            b_log_a = b * math.log(a)
        except (TypeError, ValueError):
            b_log_a = math.nan
        try:
            lattice = HyperbolicLattice(a, b, j_range, k_range)
            cfg = FrameAnalysisConfig(order, lattice, basis_alpha=basis_alpha, quadrature_order=quadrature_order,
                                      m_schedule=m_schedule, extend=extend, density_radius=density_radius,
                                      extension_tolerance=extension_tolerance,
                                      max_extension_levels=max_extension_levels, max_atoms=max_atoms)
            report = frame_bounds(cfg, worker_pool)
        except LwframesError as ex:
            _logger.error('Sweep point a={}, b={} failed: {}', a, b, ex)
            rows.extend(SweepRow.failed_row(b_log_a, threshold, size) for size in m_schedule)
            continue
        inside = lattice.b_log_a < threshold
        for size, a_est, b_est in report.schedule:
            rows.append(SweepRow(lattice.b_log_a, report.density_estimate, threshold, inside, size, a_est, b_est))
        _logger.debug('Sweep point b log a={}: {} rows', lattice.b_log_a, len(report.schedule))
    return rows
