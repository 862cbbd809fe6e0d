"""
Cayley maps between the upper half-plane U and the unit disc D, and the pseudohyperbolic metric in both charts.
"""
import numpy as np

from app.util.exceptions import ParameterDomainError
from app.util.util import scalar_or_array


def _require_halfplane(z):
    if np.any(np.asarray(z).imag <= 0):
        raise ParameterDomainError('Expected points of the upper half-plane (Im z > 0).')


def _require_disc(w):
    if np.any(np.abs(w) >= 1):
        raise ParameterDomainError('Expected points of the open unit disc (|w| < 1).')


def cayley_to_disc(z):
    """
    w = (z - i)/(z + i).

    :type z: complex | numpy.ndarray
    :rtype: complex | numpy.ndarray
    """
    z = np.asarray(z, dtype=complex)
    _require_halfplane(z)
    return scalar_or_array((z - 1j) / (z + 1j))


def cayley_to_halfplane(w):
    """
    z = i (1 + w)/(1 - w), the inverse of ``cayley_to_disc``.

    :type w: complex | numpy.ndarray
    :rtype: complex | numpy.ndarray
    """
    w = np.asarray(w, dtype=complex)
    _require_disc(w)
    return scalar_or_array(1j * (1 + w) / (1 - w))


def pseudohyperbolic_distance(z, zeta):
    """
    rho(z, zeta) = |(z - zeta)/(1 - conj(zeta) z)| on the disc.

    :type z: complex | numpy.ndarray
    :type zeta: complex | numpy.ndarray
    :rtype: float | numpy.ndarray
    """
    z = np.asarray(z, dtype=complex)
    zeta = np.asarray(zeta, dtype=complex)
    _require_disc(z)
    _require_disc(zeta)
    return scalar_or_array(np.abs((z - zeta) / (1 - np.conj(zeta) * z)))


def halfplane_pseudohyperbolic_distance(z, zeta):
    """
    |(z - zeta)/(z - conj(zeta))| on the upper half-plane; equal to the disc distance of the Cayley images.

    :type z: complex | numpy.ndarray
    :type zeta: complex | numpy.ndarray
    :rtype: float | numpy.ndarray
    """
    z = np.asarray(z, dtype=complex)
    zeta = np.asarray(zeta, dtype=complex)
    _require_halfplane(z)
    _require_halfplane(zeta)
    return scalar_or_array(np.abs((z - zeta) / (z - np.conj(zeta))))


def disc_automorphism(center, w):
    """
    The automorphism w -> (w - c)/(1 - conj(c) w) moving c to the origin.

    :type center: complex
    :type w: complex | numpy.ndarray
    :rtype: complex | numpy.ndarray
    """
    _require_disc(np.asarray(center))
    w = np.asarray(w, dtype=complex)
    _require_disc(w)
    return scalar_or_array((w - center) / (1 - np.conj(center) * w))


def hyperbolic_radius(r):
    """
    The hyperbolic radius log((1+r)/(1-r)) of a pseudohyperbolic ball of radius r.

    :type r: float
    :rtype: float
    """
    if not 0 < r < 1:
        raise ParameterDomainError('A pseudohyperbolic radius must lie in (0, 1) (got {}).'.format(r))
    return float(np.log((1 + r) / (1 - r)))


def halfplane_ball_bounds(z, r):
    """
    Euclidean bounding box of the pseudohyperbolic r-ball about z = x + iy: the ball is the Euclidean disc centred at
    x + i y cosh d with radius y sinh d, d the hyperbolic radius.

    :type z: complex
    :type r: float
    :return: (x_min, x_max, y_min, y_max)
    :rtype: (float, float, float, float)
    """
    d = hyperbolic_radius(r)
    x, y = z.real, z.imag
    radius = y * np.sinh(d)
    return x - radius, x + radius, y * np.exp(-d), y * np.exp(d)
