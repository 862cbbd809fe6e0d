import math

from app.util import log
from app.util.exceptions import ContractError, ConvergenceError


_OFF_DIAGONAL_TOLERANCE = 1e-14
_MAX_ITERATIONS_PER_EIGENVALUE = 60

_logger = log.get_logger(__name__)


def tridiagonal_eigenvalues(diagonal, off_diagonal, tolerance=_OFF_DIAGONAL_TOLERANCE,
                            max_iterations=_MAX_ITERATIONS_PER_EIGENVALUE):
    """
    Eigenvalues of a real symmetric tridiagonal matrix by the QL algorithm with implicit Wilkinson shifts.

    Alongside each eigenvalue the first component of its normalized eigenvector is returned; it is tracked by
    applying every plane rotation to the first row of the (implicit) eigenvector matrix.

    :param diagonal: the n diagonal entries
    :type diagonal: list[float]
    :param off_diagonal: the n-1 entries coupling row i to row i+1
    :type off_diagonal: list[float]
    :param tolerance: an off-diagonal entry is treated as zero once it is below tolerance times the sum of the
        magnitudes of its two diagonal neighbours
    :type tolerance: float
    :param max_iterations: QL sweeps allowed per eigenvalue
    :type max_iterations: int
    :return: eigenvalues in ascending order and the matching first eigenvector components
    :rtype: (list[float], list[float])
    """
    d = [float(value) for value in diagonal]
    size = len(d)
    if len(off_diagonal) != max(size - 1, 0):
        raise ContractError('A tridiagonal matrix of size {} needs {} off-diagonal entries (got {}).'
                            .format(size, max(size - 1, 0), len(off_diagonal)))
    e = [float(value) for value in off_diagonal] + [0.0]
    first_row = [1.0 if index == 0 else 0.0 for index in range(size)]

    for start in range(size):
        iterations = 0
        while True:
            split = start
            while split < size - 1:
                scale = abs(d[split]) + abs(d[split + 1])
                if abs(e[split]) <= tolerance * scale:
                    break
                split += 1
            if split == start:
                break
            if iterations == max_iterations:
                raise ConvergenceError('QL iteration did not converge for eigenvalue {} after {} sweeps.'
                                       .format(start, max_iterations))
            iterations += 1

            # Wilkinson shift from the leading 2x2 block
            g = (d[start + 1] - d[start]) / (2.0 * e[start])
            r = math.hypot(g, 1.0)
            g = d[split] - d[start] + e[start] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            deflated = False
            for i in range(split - 1, start - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[split] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = first_row[i + 1]
                first_row[i + 1] = s * first_row[i] + c * f
                first_row[i] = c * first_row[i] - s * f
            if deflated:
                continue
            d[start] -= p
            e[start] = g
            e[split] = 0.0

    pairs = sorted(zip(d, first_row))
    _logger.debug('Diagonalized a tridiagonal matrix of size {}.', size)
    return [value for value, _ in pairs], [component for _, component in pairs]
