import math

from app.util.exceptions import ParameterDomainError


class TimeScalePoint(object):
    """
    A translation x and a dilation s > 0; as a point of the upper half-plane it is z = x + i s.
    """

    def __init__(self, x, s):
        """
        :type x: float
        :type s: float
        """
        x, s = float(x), float(s)
        if not math.isfinite(x):
            raise ParameterDomainError('The translation x must be finite (got {}).'.format(x))
        if not (s > 0 and math.isfinite(s)):
            raise ParameterDomainError('The scale s must be a finite positive number (got {}).'.format(s))
        self._x = x
        self._s = s

    @classmethod
    def from_halfplane(cls, z):
        """
        :type z: complex
        :rtype: TimeScalePoint
        """
        return cls(z.real, z.imag)

    @property
    def x(self):
        return self._x

    @property
    def s(self):
        return self._s

    @property
    def z(self):
        """
        :rtype: complex
        """
        return complex(self._x, self._s)

    def __repr__(self):
        return 'TimeScalePoint(x={}, s={})'.format(self._x, self._s)
