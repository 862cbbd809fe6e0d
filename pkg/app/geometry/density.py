"""
Finite-radius estimates of the lower Beurling density

    D(r) = min over grid points z of  sum_{rho(z_j, z) < r} (1 - rho(z_j, z)) / log(1/(1 - r)),

and the density thresholds of the frame and sampling theorems.

An estimate is only meaningful when the pseudohyperbolic r-ball about every grid point is fully populated by the
sequence. For an explicit sequence this is checked with bounding boxes in the half-plane chart. For a hyperbolic
lattice the generated points are chosen per level from the chords that the balls cut at that height, so coverage
holds by construction.
"""
import math

import numpy as np

from app.geometry.cayley import cayley_to_disc, cayley_to_halfplane, halfplane_ball_bounds, hyperbolic_radius
from app.geometry.point_sequence import generate_lattice, lattice_points
from app.util import log
from app.util.exceptions import ConvergenceError, CoverageError, ParameterDomainError


DEFAULT_RADIUS = 0.99
DEFAULT_GRID_J_RANGE = (-1, 1)
DEFAULT_GRID_K_RANGE = (-2, 2)
EXTENSION_TOLERANCE = 1e-6
MAX_EXTENSION_ROUNDS = 8

_logger = log.get_logger(__name__)


class DensityEstimate(object):
    """
    The outcome of a density estimate. minimizing_point is the disc-chart grid point attaining the minimum.
    """

    def __init__(self, estimate, radius, grid_size, minimizing_point=None, theoretical_density=None, point_count=0,
                 extension_rounds=0):
        self.estimate = float(estimate)
        self.radius = radius
        self.grid_size = grid_size
        self.minimizing_point = minimizing_point
        self.theoretical_density = theoretical_density
        self.point_count = point_count
        self.extension_rounds = extension_rounds

    def relative_to_theory(self):
        """
        :rtype: float | None
        """
        if not self.theoretical_density:
            return None
        return self.estimate / self.theoretical_density

    def to_dict(self):
        document = {
            'density_estimate': self.estimate,
            'radius': self.radius,
            'grid_size': self.grid_size,
            'point_count': self.point_count,
            'extension_rounds': self.extension_rounds,
        }
        if self.minimizing_point is not None:
            document['minimizing_point'] = [self.minimizing_point.real, self.minimizing_point.imag]
        if self.theoretical_density is not None:
            document['theoretical_density'] = self.theoretical_density
        return document


def _check_radius(r):
    if not 0 < r < 1:
        raise ParameterDomainError('The density radius must lie in (0, 1) (got {}).'.format(r))


def beurling_sums(halfplane_points, grid, r, worker_pool=None):
    """
    The truncated sums sum (1 - rho) over the points within pseudohyperbolic distance r of each grid point. Both sets
    are in the half-plane chart, where rho(z, zeta) = |(z - zeta)/(z - conj zeta)|.

    :type halfplane_points: numpy.ndarray
    :type grid: numpy.ndarray
    :type r: float
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :rtype: numpy.ndarray
    """
    def grid_sum(center):
        rho = np.abs((halfplane_points - center) / (halfplane_points - np.conj(center)))
        return float(np.sum(np.where(rho < r, 1 - rho, 0.0)))

    centers = list(np.asarray(grid, dtype=complex).reshape(-1))
    sums = worker_pool.map(grid_sum, centers) if worker_pool else [grid_sum(center) for center in centers]
    return np.array(sums, dtype=float)


def _bounding_box(points):
    return points.real.min(), points.real.max(), points.imag.min(), points.imag.max()


def _ball_inside(center, r, box):
    x_min, x_max, y_min, y_max = halfplane_ball_bounds(center, r)
    return box[0] <= x_min and x_max <= box[1] and box[2] <= y_min and y_max <= box[3]


def deep_interior_grid(sequence, r):
    """
    The disc images of the sequence points whose r-ball lies inside the sequence's bounding box.

    Only the bounding box is checked, so this is sound for lattice-like sequences that fill their box. A sequence with
    holes can have an accepted ball the sequence never populates, and the density estimate is then biased low; pass an
    explicit ``eval_grid`` to ``lower_density`` for such sequences.

    :type sequence: app.geometry.point_sequence.PointSequence
    :type r: float
    :rtype: numpy.ndarray
    """
    points = sequence.to_halfplane().points
    box = _bounding_box(points)
    interior = [z for z in points if _ball_inside(z, r, box)]
    if not interior:
        raise CoverageError('No point of the sequence has its {}-ball inside the sequence; the density cannot be '
                            'estimated.'.format(r))
    return np.asarray(cayley_to_disc(np.array(interior)), dtype=complex).reshape(-1)


def lower_density(sequence, r=DEFAULT_RADIUS, eval_grid=None, worker_pool=None):
    """
    Finite-r, finite-grid estimate of the lower density of an explicit sequence.

    :type sequence: app.geometry.point_sequence.PointSequence
    :type r: float
    :param eval_grid: disc-chart evaluation points; defaults to the sequence's deep interior
    :type eval_grid: list[complex] | numpy.ndarray | None
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :rtype: DensityEstimate
    """
    _check_radius(r)
    if len(sequence) == 0:
        return DensityEstimate(0.0, r, grid_size=0)
    points = sequence.to_halfplane().points
    if eval_grid is None:
        disc_grid = deep_interior_grid(sequence, r)
    else:
        disc_grid = np.asarray(eval_grid, dtype=complex).reshape(-1)
    grid = np.asarray(cayley_to_halfplane(disc_grid), dtype=complex).reshape(-1)

    box = _bounding_box(points)
    for disc_point, center in zip(disc_grid, grid):
        if not _ball_inside(center, r, box):
            raise CoverageError('The {}-ball about the grid point {} is not covered by the sequence.'
                                .format(r, complex(disc_point)), grid_point=complex(disc_point))

    sums = beurling_sums(points, grid, r, worker_pool)
    return _estimate_from_sums(sums, disc_grid, r, len(points))


def _estimate_from_sums(sums, disc_grid, r, point_count, theoretical_density=None, extension_rounds=0):
    if len(sums) == 0:
        return DensityEstimate(0.0, r, 0, theoretical_density=theoretical_density, point_count=point_count)
    index = int(np.argmin(sums))
    return DensityEstimate(sums[index] / math.log(1 / (1 - r)), r, len(sums), complex(disc_grid[index]),
                           theoretical_density, point_count, extension_rounds)


def covering_lattice_indices(a, b, grid, r, margin=1):
    """
    The (j, k) indices whose points can fall inside the r-ball of some grid point. At height h = a^j the ball about
    x + iy is cut in the chord centred at x of half-width sqrt(R^2 - (h - y cosh d)^2), R = y sinh d, d the
    hyperbolic radius. Each level gets its own k window from the union of chords, widened by the margin; margin
    extra levels are added above and below.

    :type a: float
    :type b: float
    :param grid: half-plane grid points
    :type grid: numpy.ndarray
    :type r: float
    :type margin: int
    :rtype: list[(int, int)]
    """
    d = hyperbolic_radius(r)
    grid = np.asarray(grid, dtype=complex).reshape(-1)
    centers_y = grid.imag * math.cosh(d)
    radii = grid.imag * math.sinh(d)
    log_a = math.log(a)
    j_low = int(math.floor(math.log(np.min(grid.imag) * math.exp(-d)) / log_a)) - margin
    j_high = int(math.ceil(math.log(np.max(grid.imag) * math.exp(d)) / log_a)) + margin

    indices = []
    for j in range(j_low, j_high + 1):
        height = a ** j
        reach_sq = radii ** 2 - (height - centers_y) ** 2
        hit = reach_sq > 0
        if not np.any(hit):
            continue
        chords = np.sqrt(reach_sq[hit])
        x_low = np.min(grid.real[hit] - chords)
        x_high = np.max(grid.real[hit] + chords)
        spacing = height * b
        k_low = int(math.floor(x_low / spacing)) - margin
        k_high = int(math.ceil(x_high / spacing)) + margin
        indices.extend((j, k) for k in range(k_low, k_high + 1))
    return indices


def lattice_density(lattice, r=DEFAULT_RADIUS, grid_j_range=DEFAULT_GRID_J_RANGE, grid_k_range=DEFAULT_GRID_K_RANGE,
                    extend=True, tolerance=EXTENSION_TOLERANCE, max_rounds=MAX_EXTENSION_ROUNDS, worker_pool=None):
    """
    Lower density of a hyperbolic lattice evaluated on the disc images of the central sub-lattice.

    With extend=True the generation ranges come from the balls about the grid points and are widened one margin at
    a time until every grid sum changes by less than the tolerance. With extend=False the lattice's own ranges are
    used as an explicit sequence and coverage is checked.

    :type lattice: app.geometry.point_sequence.HyperbolicLattice
    :type r: float
    :type grid_j_range: (int, int)
    :type grid_k_range: (int, int)
    :type extend: bool
    :type tolerance: float
    :type max_rounds: int
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :rtype: DensityEstimate
    """
    _check_radius(r)
    theory = lattice.theoretical_density()
    if lattice.is_empty():
        return DensityEstimate(0.0, r, 0, theoretical_density=theory)
    grid_indices = [(j, k) for j in range(grid_j_range[0], grid_j_range[1] + 1)
                    for k in range(grid_k_range[0], grid_k_range[1] + 1)]
    grid = lattice_points(lattice.a, lattice.b, grid_indices)
    disc_grid = np.asarray(cayley_to_disc(grid), dtype=complex).reshape(-1)

    if not extend:
        estimate = lower_density(generate_lattice(lattice), r, disc_grid, worker_pool)
        estimate.theoretical_density = theory
        return estimate

    margin = 1
    indices = covering_lattice_indices(lattice.a, lattice.b, grid, r, margin)
    sums = beurling_sums(lattice_points(lattice.a, lattice.b, indices), grid, r, worker_pool)
    for rounds in range(1, max_rounds + 1):
        margin += 1
        wider = covering_lattice_indices(lattice.a, lattice.b, grid, r, margin)
        wider_sums = beurling_sums(lattice_points(lattice.a, lattice.b, wider), grid, r, worker_pool)
        change = float(np.max(np.abs(wider_sums - sums)))
        indices, sums = wider, wider_sums
        _logger.debug('Density extension round {}: {} points, largest change {}', rounds, len(indices), change)
        if change < tolerance:
            return _estimate_from_sums(sums, disc_grid, r, len(indices), theory, rounds)
    raise ConvergenceError('The lattice density did not settle after {} extension rounds.'.format(max_rounds))


def density_thresholds(order):
    """
    The frame threshold n + alpha/2 on the lower density and the lattice threshold 4 pi/(2n + alpha) on b log a.
    The lattice threshold is +inf when 2n + alpha <= 0.

    :type order: app.special.wavelet_order.WaveletOrder
    :rtype: (float, float)
    """
    disc_threshold = order.n + order.alpha / 2
    denominator = 2 * order.n + order.alpha
    lattice_threshold = 4 * math.pi / denominator if denominator > 0 else math.inf
    return disc_threshold, lattice_threshold


def bergman_parameter_for_order(order):
    """
    The Bergman weight 2n + alpha + 1 whose sampling threshold matches the frame threshold of the order.

    :type order: app.special.wavelet_order.WaveletOrder
    :rtype: float
    """
    return 2 * order.n + order.alpha + 1


def bergman_sampling_threshold(bergman_alpha):
    """
    A separated sequence with lower density above (alpha - 1)/2 samples the Bergman space A_alpha.

    :type bergman_alpha: float
    :rtype: float
    """
    return (bergman_alpha - 1) / 2
