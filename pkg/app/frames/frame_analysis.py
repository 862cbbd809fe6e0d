"""
Frame operators of wavelet systems {T_x D_s window} restricted to the span of the first M orthonormal Laguerre basis
elements e_0 .. e_{M-1}:

    S[m, m'] = sum over atoms g of <e_m, g> <g, e_m'>.

The extreme eigenvalues of S estimate the frame bounds on that subspace. Atoms are taken unnormalized.
"""
import math

import numpy as np

from app.frames.eigensolver import extreme_eigenvalues
from app.geometry.density import density_thresholds, lattice_density, lower_density
from app.geometry.point_sequence import (HyperbolicLattice, PointSequence, generate_lattice, is_separated,
                                         lattice_points, separation_constant)
from app.quadrature.gauss_laguerre import check_order, laplace_integral, required_order
from app.special.laguerre import laguerre_polynomial_values, orthonormal_scale
from app.special.wavelet_order import WaveletOrder
from app.transforms.spectral_signal import SpectralSignal
from app.transforms.wavelet_transform import basis_coefficient_rows
from app.transforms.windows import make_window
from app.util import log
from app.util.exceptions import ConfigurationError, ConvergenceError, LwframesError
from app.util.worker_pool import chunked


DEFAULT_BASIS_SIZE = 16
EXTENSION_TOLERANCE = 1e-8
MAX_EXTENSION_LEVELS = 64
MAX_ATOMS = 500000
_ATOM_CHUNK_SIZE = 2048

_logger = log.get_logger(__name__)


class FrameAnalysisConfig(object):
    """
    Everything that determines a frame analysis: the wavelet order and window, the atom locations (a lattice or an
    explicit sequence), the test subspace (basis size M and basis parameter beta), the quadrature order and the
    truncation policy. The m_schedule lists the subspace sizes to report; the largest one is analysed.
    """

    def __init__(self, order, sequence, basis_size=DEFAULT_BASIS_SIZE, basis_alpha=None, quadrature_order=None,
                 window='laguerre', m_schedule=None, extend=True, extension_tolerance=EXTENSION_TOLERANCE,
                 max_extension_levels=MAX_EXTENSION_LEVELS, max_atoms=MAX_ATOMS, density_radius=0.99):
        """
        :type order: WaveletOrder
        :type sequence: HyperbolicLattice | PointSequence
        :type basis_size: int
        :param basis_alpha: parameter beta of the test basis; defaults to the wavelet's alpha
        :type basis_alpha: float | None
        :type quadrature_order: int | None
        :param window: 'laguerre' or 'paul'
        :type window: str
        :type m_schedule: list[int] | None
        :param extend: auto-extend a lattice until the matrix entries settle (explicit sequences are never extended)
        :type extend: bool
        :type extension_tolerance: float
        :type max_extension_levels: int
        :type max_atoms: int
        :type density_radius: float
        """
        if not isinstance(order, WaveletOrder):
            raise ConfigurationError('A frame analysis needs a WaveletOrder (got {!r}).'.format(order))
        if not isinstance(sequence, (HyperbolicLattice, PointSequence)):
            raise ConfigurationError('Atoms must come from a HyperbolicLattice or a PointSequence.')
        schedule = list(m_schedule) if m_schedule else [basis_size]
        for size in schedule:
            if int(size) != size or size < 1:
                raise ConfigurationError('Basis sizes must be positive integers (got {}).'.format(size))
        basis_alpha = order.alpha if basis_alpha is None else float(basis_alpha)
        if not basis_alpha > -1:
            raise ConfigurationError('The basis parameter must be > -1 (got {}).'.format(basis_alpha))
        if not extension_tolerance > 0:
            raise ConfigurationError('The extension tolerance must be positive (got {}).'.format(extension_tolerance))

        self.order = order
        self.sequence = sequence
        self.m_schedule = [int(size) for size in schedule]
        self.basis_alpha = basis_alpha
        self.window = make_window(window, order)
        degree = self.basis_size - 1 + self.window.degree
        if quadrature_order is None:
            quadrature_order = required_order(degree)
        else:
            check_order(quadrature_order, degree)
        self.quadrature_order = int(quadrature_order)
        self.extend = bool(extend) and isinstance(sequence, HyperbolicLattice)
        self.extension_tolerance = float(extension_tolerance)
        self.max_extension_levels = int(max_extension_levels)
        self.max_atoms = int(max_atoms)
        self.density_radius = density_radius

    @property
    def basis_size(self):
        """
        :rtype: int
        """
        return max(self.m_schedule)

    def atom_locations(self):
        """
        Translations and scales of the configured atoms in their fixed order (j-major, k-minor for lattices).

        :rtype: (numpy.ndarray, numpy.ndarray)
        """
        if isinstance(self.sequence, HyperbolicLattice):
            points = lattice_points(self.sequence.a, self.sequence.b, self.sequence.indices())
        else:
            points = self.sequence.to_halfplane().points
        return points.real.copy(), points.imag.copy()


class FrameReport(object):
    """
    An immutable record of one frame analysis. a_est and b_est belong to the largest basis size of the schedule.
    """

    def __init__(self, a_est, b_est, density_estimate, disc_threshold, lattice_threshold, atom_norm_sq, metadata,
                 schedule):
        """
        :type a_est: float
        :type b_est: float
        :type density_estimate: float | None
        :type disc_threshold: float
        :type lattice_threshold: float
        :type atom_norm_sq: float
        :type metadata: dict
        :param schedule: (basis size, a_est, b_est) for every entry of the m_schedule
        :type schedule: list[(int, float, float)]
        """
        self._a_est = a_est
        self._b_est = b_est
        self._density_estimate = density_estimate
        self._disc_threshold = disc_threshold
        self._lattice_threshold = lattice_threshold
        self._atom_norm_sq = atom_norm_sq
        self._metadata = dict(metadata)
        self._schedule = tuple(schedule)

    @property
    def a_est(self):
        return self._a_est

    @property
    def b_est(self):
        return self._b_est

    @property
    def density_estimate(self):
        return self._density_estimate

    @property
    def disc_threshold(self):
        return self._disc_threshold

    @property
    def lattice_threshold(self):
        return self._lattice_threshold

    @property
    def atom_norm_sq(self):
        return self._atom_norm_sq

    @property
    def metadata(self):
        return dict(self._metadata)

    @property
    def schedule(self):
        """
        :rtype: tuple[(int, float, float)]
        """
        return self._schedule

    def to_dict(self):
        return {
            'a_est': self._a_est,
            'b_est': self._b_est,
            'density_estimate': self._density_estimate,
            'disc_threshold': self._disc_threshold,
            'lattice_threshold': self._lattice_threshold,
            'atom_norm_sq': self._atom_norm_sq,
            'metadata': dict(self._metadata),
            'schedule': [{'M': size, 'a_est': a_est, 'b_est': b_est} for size, a_est, b_est in self._schedule],
        }


def _coefficient_rows(cfg, x, s, worker_pool=None):
    """
    The rows <e_m, g> for atoms at (x, s), evaluated in chunks.

    :rtype: numpy.ndarray
    """
    if len(x) == 0:
        return np.zeros((0, cfg.basis_size), dtype=complex)

    def chunk_rows(rows):
        return basis_coefficient_rows(cfg.basis_size, cfg.basis_alpha, cfg.window, x[rows], s[rows],
                                      cfg.quadrature_order)

    slices = chunked(len(x), _ATOM_CHUNK_SIZE)
    blocks = worker_pool.map(chunk_rows, slices) if worker_pool else [chunk_rows(rows) for rows in slices]
    return np.concatenate(blocks, axis=0)


def accumulate_frame_matrix(rows):
    """
    sum over atoms of the rank-one matrices c_g c_g^H, added one atom at a time in row order.

    :param rows: coefficient rows c_g[m] = <e_m, g>
    :type rows: numpy.ndarray
    :rtype: numpy.ndarray
    """
    size = rows.shape[1]
    matrix = np.zeros((size, size), dtype=complex)
    for row in rows:
        matrix += np.outer(row, np.conj(row))
    return matrix


def frame_matrix(cfg, worker_pool=None):
    """
    The frame matrix over the configured atoms (no extension).

    :type cfg: FrameAnalysisConfig
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :rtype: numpy.ndarray
    """
    x, s = cfg.atom_locations()
    return accumulate_frame_matrix(_coefficient_rows(cfg, x, s, worker_pool))


def frame_matrix_from_signals(signals, basis_size, basis_alpha, quadrature_order=None):
    """
    The frame matrix of explicitly given atoms. <e_m, g> pairs e_m with the spectrum of g on the half-line, and
    every such integral has the form integral t^c e^{-lambda t} P(t) dt.

    :type signals: list[SpectralSignal]
    :type basis_size: int
    :type basis_alpha: float
    :type quadrature_order: int | None
    :rtype: numpy.ndarray
    """
    rows = np.zeros((len(signals), basis_size), dtype=complex)
    normalization = np.array([orthonormal_scale(m, basis_alpha) for m in range(basis_size)])
    for index, signal in enumerate(signals):
        if signal.is_zero():
            continue
        degree = basis_size - 1 + signal.degree
        if quadrature_order is None:
            points = required_order(degree)
        else:
            check_order(quadrature_order, degree)
            points = quadrature_order
        conjugate = SpectralSignal(signal.basis_alpha, np.conj(signal.coefficients))
        rate = np.conj(signal.decay_rate) + 0.5

        def integrand(t, conjugate=conjugate):
            return laguerre_polynomial_values(basis_size - 1, basis_alpha, t) * conjugate.polynomial(t)

        integrals = laplace_integral(integrand, (basis_alpha + signal.basis_alpha) / 2, rate, points)
        rows[index] = normalization * np.asarray(integrals)
    return accumulate_frame_matrix(rows)


class _Level(object):
    """
    One lattice level j with its contiguous k window and the running sum of its contributions.
    """

    def __init__(self, j, k_low, k_high):
        self.j = j
        self.k_low = k_low
        self.k_high = k_high

    @property
    def count(self):
        return max(self.k_high - self.k_low + 1, 0)


class _LatticeExtender(object):
    """
    Widens a truncated lattice until the frame matrix settles. Every configured level first grows its k window by
    doubling; the added shell counts as settled once its largest entry is below tolerance times the largest entry of
    the configured matrix and no larger than half of what the window already holds. Levels are then added below
    and above until a whole level is below the tolerance.
    """

    def __init__(self, cfg, worker_pool=None):
        self._cfg = cfg
        self._lattice = cfg.sequence
        self._worker_pool = worker_pool
        self._logger = log.get_logger(__name__)
        self._atoms = 0

    def _contribution(self, j, k_low, k_high):
        if k_high < k_low:
            return np.zeros((self._cfg.basis_size, self._cfg.basis_size), dtype=complex)
        self._atoms += k_high - k_low + 1
        if self._atoms > self._cfg.max_atoms:
            raise ConvergenceError('Lattice extension exceeded {} atoms before the frame matrix settled.'
                                   .format(self._cfg.max_atoms))
        points = lattice_points(self._lattice.a, self._lattice.b, [(j, k) for k in range(k_low, k_high + 1)])
        return accumulate_frame_matrix(_coefficient_rows(self._cfg, points.real, points.imag, self._worker_pool))

    def _grow_level(self, level, threshold):
        total = self._contribution(level.j, level.k_low, level.k_high)
        while True:
            width = max(level.count // 2, 1)
            shell = (self._contribution(level.j, level.k_low - width, level.k_low - 1)
                     + self._contribution(level.j, level.k_high + 1, level.k_high + width))
            level.k_low -= width
            level.k_high += width
            shell_size = np.max(np.abs(shell))
            held = np.max(np.abs(total))
            total = total + shell
            if shell_size < threshold and shell_size <= 0.5 * held:
                return total

    def extend(self, base_matrix):
        """
        :type base_matrix: numpy.ndarray
        :return: the levels to use, in ascending j
        :rtype: list[_Level]
        """
        lattice = self._lattice
        scale = np.max(np.abs(base_matrix)) if base_matrix.size else 0.0
        threshold = self._cfg.extension_tolerance * (scale if scale > 0 else 1.0)
        levels = {j: _Level(j, lattice.k_range[0], lattice.k_range[1])
                  for j in range(lattice.j_range[0], lattice.j_range[1] + 1)}
        for level in levels.values():
            self._grow_level(level, threshold)

        for direction, start in ((-1, lattice.j_range[0] - 1), (1, lattice.j_range[1] + 1)):
            j = start
            for _ in range(self._cfg.max_extension_levels):
                level = _Level(j, lattice.k_range[0], lattice.k_range[1])
                level_total = self._grow_level(level, threshold)
                levels[j] = level
                if np.max(np.abs(level_total)) < threshold:
                    break
                j += direction
            else:
                raise ConvergenceError('The frame matrix did not settle within {} added levels.'
                                       .format(self._cfg.max_extension_levels))
        self._logger.debug('Extended lattice to {} levels, {} atoms visited.', len(levels), self._atoms)
        return [levels[j] for j in sorted(levels)]


def _levels_matrix(cfg, levels, worker_pool=None):
    indices = [(level.j, k) for level in levels for k in range(level.k_low, level.k_high + 1)]
    points = lattice_points(cfg.sequence.a, cfg.sequence.b, indices)
    return accumulate_frame_matrix(_coefficient_rows(cfg, points.real, points.imag, worker_pool)), len(indices)


def extended_frame_matrix(cfg, worker_pool=None):
    """
    The frame matrix after automatic extension, recomputed over the final atoms in (j, k) order, and the metadata
    describing the truncation.

    :type cfg: FrameAnalysisConfig
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :rtype: (numpy.ndarray, dict)
    """
    base = frame_matrix(cfg, worker_pool)
    x, _ = cfg.atom_locations()
    metadata = {'basis_size': cfg.basis_size, 'basis_alpha': cfg.basis_alpha, 'window': cfg.window.name,
                'quadrature_order': cfg.quadrature_order, 'configured_atoms': len(x), 'extended': False}
    if isinstance(cfg.sequence, HyperbolicLattice):
        metadata.update(cfg.sequence.to_dict())
    if not cfg.extend or len(x) == 0:
        metadata['atom_count'] = len(x)
        return base, metadata

    levels = _LatticeExtender(cfg, worker_pool).extend(base)
    matrix, atom_count = _levels_matrix(cfg, levels, worker_pool)
    metadata.update({
        'extended': True,
        'atom_count': atom_count,
        'extended_j_range': [levels[0].j, levels[-1].j],
        'extended_k_extent': [min(level.k_low for level in levels), max(level.k_high for level in levels)],
        'extension_tolerance': cfg.extension_tolerance,
    })
    return matrix, metadata


def _sequence_density(cfg, worker_pool):
    try:
        if isinstance(cfg.sequence, HyperbolicLattice):
            return lattice_density(cfg.sequence, cfg.density_radius, worker_pool=worker_pool).estimate
        return lower_density(cfg.sequence, cfg.density_radius, worker_pool=worker_pool).estimate
    except LwframesError as ex:
        _logger.warning('No density estimate for this sequence: {}', ex)
        return None


def _separation(cfg):
    sequence = generate_lattice(cfg.sequence) if isinstance(cfg.sequence, HyperbolicLattice) else cfg.sequence
    if len(sequence) < 2:
        return None
    return separation_constant(sequence)


def frame_bounds(cfg, worker_pool=None):
    """
    Estimate the frame bounds on the test subspace for every basis size of the schedule. The schedule reads the
    leading blocks of one matrix, so a_est never increases and b_est never decreases along growing sizes.

    :type cfg: FrameAnalysisConfig
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :rtype: FrameReport
    """
    matrix, metadata = extended_frame_matrix(cfg, worker_pool)
    schedule = []
    for size in cfg.m_schedule:
        smallest, largest = extreme_eigenvalues(matrix[:size, :size])
        schedule.append((size, max(smallest, 0.0), largest))
    _, a_est, b_est = next(entry for entry in schedule if entry[0] == cfg.basis_size)

    separation = _separation(cfg)
    metadata['separation'] = separation
    metadata['separated'] = None if separation is None else is_separated(separation)
    disc_threshold, lattice_threshold = density_thresholds(cfg.order)
    if isinstance(cfg.sequence, HyperbolicLattice):
        metadata['b_log_a'] = cfg.sequence.b_log_a
        metadata['theoretical_density'] = cfg.sequence.theoretical_density()

    report = FrameReport(a_est, b_est, _sequence_density(cfg, worker_pool), disc_threshold, lattice_threshold,
                         cfg.window.norm_sq(), metadata, schedule)
    _logger.info('Frame bounds for {} atoms on M={}: a_est={}, b_est={}', metadata['atom_count'], cfg.basis_size,
                 a_est, b_est)
    return report


def condition_number(a_est, b_est):
    """
    :rtype: float
    """
    return b_est / a_est if a_est > 0 else math.inf
