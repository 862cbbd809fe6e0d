import math

import numpy as np

from app.util import log
from app.util.exceptions import ContractError, ConvergenceError


HERMITIAN_TOLERANCE = 1e-10
_OFF_DIAGONAL_TOLERANCE = 1e-12
_MAX_SWEEPS = 100

_logger = log.get_logger(__name__)


def symmetric_eigenvalues(matrix, tolerance=_OFF_DIAGONAL_TOLERANCE, max_sweeps=_MAX_SWEEPS):
    """
    Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations. Each rotation zeroes one off-diagonal pair;
    sweeps repeat until the off-diagonal Frobenius norm is at most tolerance times the Frobenius norm of the matrix.

    :type matrix: numpy.ndarray
    :type tolerance: float
    :type max_sweeps: int
    :return: the eigenvalues in ascending order
    :rtype: numpy.ndarray
    """
    work = np.array(matrix, dtype=float)
    size = work.shape[0]
    total_norm = np.linalg.norm(work)
    if size <= 1 or total_norm == 0:
        return np.sort(np.diag(work))

    for sweep in range(max_sweeps):
        off_diagonal = math.sqrt(max(np.sum(work ** 2) - np.sum(np.diag(work) ** 2), 0.0))
        if off_diagonal <= tolerance * total_norm:
            _logger.debug('Jacobi converged after {} sweeps on a {}x{} matrix.', sweep, size, size)
            return np.sort(np.diag(work))
        for p in range(size - 1):
            for q in range(p + 1, size):
                if work[p, q] == 0.0:
                    continue
                tau = (work[q, q] - work[p, p]) / (2.0 * work[p, q])
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                row_p = work[p, :].copy()
                work[p, :] = c * row_p - s * work[q, :]
                work[q, :] = s * row_p + c * work[q, :]
                column_p = work[:, p].copy()
                work[:, p] = c * column_p - s * work[:, q]
                work[:, q] = s * column_p + c * work[:, q]
                work[p, q] = work[q, p] = 0.0

    raise ConvergenceError('Jacobi rotations did not converge after {} sweeps.'.format(max_sweeps))


def check_hermitian(matrix):
    """
    :type matrix: numpy.ndarray
    :rtype: numpy.ndarray
    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ContractError('Expected a square matrix (got shape {}).'.format(matrix.shape))
    if not np.all(np.isfinite(matrix)):
        raise ContractError('The matrix has non-finite entries.')
    scale = np.max(np.abs(matrix)) if matrix.size else 0.0
    if scale and np.max(np.abs(matrix - matrix.conj().T)) > HERMITIAN_TOLERANCE * scale:
        raise ContractError('The matrix is not Hermitian within {} relative.'.format(HERMITIAN_TOLERANCE))
    return matrix


def hermitian_eigenvalues(matrix):
    """
    Eigenvalues of a Hermitian matrix H = A + iB, ascending. A complex H is embedded in the real symmetric
    [[A, -B], [B, A]], whose spectrum is that of H with every eigenvalue doubled.

    :type matrix: numpy.ndarray
    :rtype: numpy.ndarray
    """
    matrix = check_hermitian(matrix)
    if matrix.size == 0:
        return np.zeros(0)
    hermitian_part = (matrix + matrix.conj().T) / 2
    real, imaginary = hermitian_part.real, hermitian_part.imag
    if not np.any(imaginary):
        return symmetric_eigenvalues(real)
    embedding = np.block([[real, -imaginary], [imaginary, real]])
    return symmetric_eigenvalues(embedding)[0::2]


def extreme_eigenvalues(matrix):
    """
    The smallest and largest eigenvalues of a Hermitian matrix; (0, 0) for an empty one.

    :type matrix: numpy.ndarray
    :rtype: (float, float)
    """
    eigenvalues = hermitian_eigenvalues(matrix)
    if eigenvalues.size == 0:
        return 0.0, 0.0
    return float(eigenvalues[0]), float(eigenvalues[-1])
