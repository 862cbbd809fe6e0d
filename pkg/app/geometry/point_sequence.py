from enum import Enum
import math

import numpy as np

from app.geometry.cayley import cayley_to_disc, cayley_to_halfplane
from app.util import log
from app.util.exceptions import DegenerateInputError, ParameterDomainError
from app.util.worker_pool import chunked


DUPLICATE_TOLERANCE = 1e-12
SEPARATED_THRESHOLD = 1e-9
_PAIR_CHUNK_SIZE = 512

_logger = log.get_logger(__name__)


class Chart(str, Enum):
    HALF_PLANE = 'half_plane'
    DISC = 'disc'


class PointSequence(object):
    """
    A finite set of points in one chart, kept in the order it was given. Lattice-generated sequences carry their
    (j, k) labels.
    """

    def __init__(self, points, chart=Chart.HALF_PLANE, labels=None, allow_duplicates=False):
        """
        :type points: list[complex] | numpy.ndarray
        :type chart: Chart
        :param labels: optional index labels, one per point
        :type labels: list[tuple] | None
        :param allow_duplicates: accept points closer than 1e-12 to each other (separation checks need this)
        :type allow_duplicates: bool
        """
        chart = Chart(chart)
        points = np.array(points, dtype=complex).reshape(-1)
        if not np.all(np.isfinite(points)):
            raise ParameterDomainError('Sequence points must be finite.')
        if chart == Chart.HALF_PLANE and np.any(points.imag <= 0):
            raise ParameterDomainError('Half-plane sequence points must satisfy Im z > 0.')
        if chart == Chart.DISC and np.any(np.abs(points) >= 1):
            raise ParameterDomainError('Disc sequence points must satisfy |w| < 1.')
        if labels is not None and len(labels) != len(points):
            raise ParameterDomainError('Expected one label per point ({} labels for {} points).'
                                       .format(len(labels), len(points)))
        if not allow_duplicates:
            duplicate = _first_duplicate(points)
            if duplicate is not None:
                raise ParameterDomainError('The sequence contains duplicate points near {}.'.format(duplicate))
        points.setflags(write=False)
        self._points = points
        self._chart = chart
        self._labels = None if labels is None else [tuple(label) for label in labels]

    @property
    def points(self):
        """
        :rtype: numpy.ndarray
        """
        return self._points

    @property
    def chart(self):
        """
        :rtype: Chart
        """
        return self._chart

    @property
    def labels(self):
        """
        :rtype: list[tuple] | None
        """
        return self._labels

    def __len__(self):
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def to_disc(self):
        """
        :rtype: PointSequence
        """
        if self._chart == Chart.DISC:
            return self
        return self._in_chart(cayley_to_disc(self._points), Chart.DISC)

    def to_halfplane(self):
        """
        :rtype: PointSequence
        """
        if self._chart == Chart.HALF_PLANE:
            return self
        return self._in_chart(cayley_to_halfplane(self._points), Chart.HALF_PLANE)

    def _in_chart(self, mapped, chart):
        sequence = PointSequence.__new__(PointSequence)
        mapped = np.array(mapped, dtype=complex).reshape(-1)
        mapped.setflags(write=False)
        sequence._points = mapped
        sequence._chart = chart
        sequence._labels = self._labels
        return sequence

    def __repr__(self):
        return 'PointSequence({} points, chart={})'.format(len(self), self._chart.value)


def _first_duplicate(points):
    """
    Sweep the points sorted by real part and compare each one with the neighbours inside the tolerance window.

    :type points: numpy.ndarray
    :rtype: complex | None
    """
    if len(points) < 2:
        return None
    order = np.argsort(points.real, kind='stable')
    ordered = points[order]
    window_ends = np.searchsorted(ordered.real, ordered.real + DUPLICATE_TOLERANCE, side='right')
    for index in np.nonzero(window_ends - np.arange(len(ordered)) > 1)[0]:
        neighbours = ordered[index + 1:window_ends[index]]
        if np.any(np.abs(neighbours - ordered[index]) <= DUPLICATE_TOLERANCE):
            return complex(ordered[index])
    return None


class HyperbolicLattice(object):
    """
    The points a^j (b k + i) for j in j_range and k in k_range (inclusive integer intervals; an interval whose lower
    end exceeds its upper end is empty).
    """

    def __init__(self, a, b, j_range, k_range):
        """
        :type a: float
        :type b: float
        :type j_range: (int, int)
        :type k_range: (int, int)
        """
        if not (math.isfinite(a) and a > 1):
            raise ParameterDomainError('The dilation parameter a must be a finite number > 1 (got {}).'.format(a))
        if not (math.isfinite(b) and b > 0):
            raise ParameterDomainError('The translation parameter b must be a finite number > 0 (got {}).'.format(b))
        self._a = float(a)
        self._b = float(b)
        self._j_range = _integer_interval(j_range, 'j_range')
        self._k_range = _integer_interval(k_range, 'k_range')

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    @property
    def j_range(self):
        """
        :rtype: (int, int)
        """
        return self._j_range

    @property
    def k_range(self):
        """
        :rtype: (int, int)
        """
        return self._k_range

    @property
    def b_log_a(self):
        return self._b * math.log(self._a)

    def theoretical_density(self):
        """
        2 pi / (b log a).

        :rtype: float
        """
        return 2 * math.pi / self.b_log_a

    def is_empty(self):
        return self._j_range[0] > self._j_range[1] or self._k_range[0] > self._k_range[1]

    def indices(self):
        """
        All (j, k) pairs, j-major then k.

        :rtype: list[(int, int)]
        """
        if self.is_empty():
            return []
        return [(j, k) for j in range(self._j_range[0], self._j_range[1] + 1)
                for k in range(self._k_range[0], self._k_range[1] + 1)]

    def point(self, j, k):
        """
        :rtype: complex
        """
        return self._a ** j * complex(self._b * k, 1.0)

    def extended(self, j_margin=1, k_factor=2):
        """
        The lattice with the j range grown by j_margin levels on each side and the k range widened by k_factor
        about its centre.

        :type j_margin: int
        :type k_factor: int
        :rtype: HyperbolicLattice
        """
        k_low, k_high = self._k_range
        half_width = (k_high - k_low) / 2
        centre = (k_high + k_low) / 2
        grown = max(half_width * k_factor, half_width + 1)
        new_k_range = (int(math.floor(centre - grown)), int(math.ceil(centre + grown)))
        return HyperbolicLattice(self._a, self._b, (self._j_range[0] - j_margin, self._j_range[1] + j_margin),
                                 new_k_range)

    def with_b(self, b):
        """
        :rtype: HyperbolicLattice
        """
        return HyperbolicLattice(self._a, b, self._j_range, self._k_range)

    def to_dict(self):
        return {
            'a': self._a,
            'b': self._b,
            'j_range': list(self._j_range),
            'k_range': list(self._k_range),
        }

    def __repr__(self):
        return 'HyperbolicLattice(a={}, b={}, j_range={}, k_range={})'.format(
            self._a, self._b, self._j_range, self._k_range)


def _integer_interval(interval, name):
    low, high = interval
    if int(low) != low or int(high) != high:
        raise ParameterDomainError('{} must have integer bounds (got {}).'.format(name, interval))
    return int(low), int(high)


def lattice_points(a, b, indices):
    """
    :type a: float
    :type b: float
    :type indices: list[(int, int)]
    :rtype: numpy.ndarray
    """
    if not indices:
        return np.zeros(0, dtype=complex)
    index_array = np.array(indices, dtype=float)
    heights = np.power(a, index_array[:, 0])
    return heights * (b * index_array[:, 1] + 1j)


def generate_lattice(lattice):
    """
    The half-plane sequence a^j (b k + i), ordered j-major then k, labelled by (j, k).

    :type lattice: HyperbolicLattice
    :rtype: PointSequence
    """
    indices = lattice.indices()
    return PointSequence(lattice_points(lattice.a, lattice.b, indices), Chart.HALF_PLANE, labels=indices)


def separation_constant(sequence, worker_pool=None):
    """
    The infimum of the pseudohyperbolic distance over pairs of distinct indices, computed on the disc chart in row
    chunks; chunk minima are reduced in order.

    :type sequence: PointSequence
    :type worker_pool: app.util.worker_pool.WorkerPool | None
    :rtype: float
    """
    if len(sequence) < 2:
        raise DegenerateInputError('The separation constant needs at least two points (got {}).'.format(len(sequence)))
    points = sequence.to_disc().points

    def chunk_minimum(rows):
        block = points[rows, np.newaxis]
        distances = np.abs((block - points[np.newaxis, :]) / (1 - np.conj(points[np.newaxis, :]) * block))
        row_indices = np.arange(rows.start, rows.stop)[:, np.newaxis]
        distances[np.arange(len(points))[np.newaxis, :] <= row_indices] = np.inf
        return float(np.min(distances))

    slices = chunked(len(points), _PAIR_CHUNK_SIZE)
    minima = worker_pool.map(chunk_minimum, slices) if worker_pool else [chunk_minimum(rows) for rows in slices]
    separation = min(minima)
    _logger.debug('Separation of {} points: {}', len(points), separation)
    return separation


def is_separated(separation):
    return separation > SEPARATED_THRESHOLD
