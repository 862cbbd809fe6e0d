import math

import numpy as np

from app.special.laguerre import laguerre_function, laguerre_norm_sq, laguerre_polynomial_values
from app.special.rational_jacobi import s_eval
from app.special.wavelet_order import WaveletOrder
from app.transforms.paul import PaulWindow
from app.util.exceptions import ParameterDomainError
from app.util.util import scalar_or_array


class LaguerreWindow(object):
    """
    The analyzing window S_n^alpha(./2). Its spectrum is 2 l_n^alpha(2t), i.e.

        scale_factor * t^exponent * e^{-t} * polynomial(t)   with   scale_factor = 2^{alpha/2+1},
        exponent = alpha/2 and polynomial(u) = L_n^alpha(2u).
    """

    def __init__(self, order):
        """
        :type order: WaveletOrder
        """
        self._order = order
        self._scale_factor = 2.0 ** (order.half_alpha + 1)

    @property
    def order(self):
        """
        :rtype: WaveletOrder
        """
        return self._order

    @property
    def name(self):
        return 'laguerre'

    @property
    def scale_factor(self):
        """
        :rtype: float
        """
        return self._scale_factor

    @property
    def exponent(self):
        return self._order.half_alpha

    @property
    def degree(self):
        return self._order.n

    def polynomial(self, u):
        """
        L_n^alpha(2u) at real or complex points.

        :type u: numpy.ndarray
        :rtype: numpy.ndarray
        """
        return laguerre_polynomial_values(self._order.n, self._order.alpha, 2 * np.asarray(u))[self._order.n]

    def spectrum(self, t):
        """
        :type t: float | numpy.ndarray
        :rtype: float | numpy.ndarray
        """
        return scalar_or_array(2 * np.asarray(laguerre_function(self._order, 2 * np.asarray(t, dtype=float))))

    def time_value(self, t):
        """
        S_n^alpha(t/2).

        :type t: float | numpy.ndarray
        :rtype: complex | numpy.ndarray
        """
        return s_eval(self._order, np.asarray(t, dtype=float) / 2)

    def norm_sq(self):
        """
        2 Gamma(n+alpha+1)/n!.

        :rtype: float
        """
        return 2 * laguerre_norm_sq(self._order)


def make_window(name, order):
    """
    Build the named window for an order. The Paul window only uses alpha.

    :type name: str
    :type order: WaveletOrder
    :rtype: LaguerreWindow | PaulWindow
    """
    if name == 'laguerre':
        return LaguerreWindow(order)
    if name == 'paul':
        return PaulWindow(order.alpha)
    raise ParameterDomainError('Unknown window "{}"; expected "laguerre" or "paul".'.format(name))


def spectral_atom(order, point, t):
    """
    The spectrum of T_x D_s S_n^alpha(./2) at t: e^{-ixt} s^{1/2} 2 l_n^alpha(2st), zero for t <= 0.

    :type order: WaveletOrder
    :type point: app.transforms.time_scale_point.TimeScalePoint
    :type t: float | numpy.ndarray
    :rtype: complex | numpy.ndarray
    """
    t = np.asarray(t, dtype=float)
    window = LaguerreWindow(order)
    values = np.exp(-1j * point.x * t) * math.sqrt(point.s) * np.asarray(window.spectrum(point.s * t))
    return scalar_or_array(np.where(t > 0, values, 0.0))
