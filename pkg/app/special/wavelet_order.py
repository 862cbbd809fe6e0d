import math

from app.util.exceptions import ParameterDomainError


class WaveletOrder(object):
    """
    The pair (n, alpha) that indexes the analyzing wavelet S_n^alpha, the Laguerre function l_n^alpha behind its
    spectrum and the circular Jacobi polynomial g_n^alpha of its disc factorization.

    Construction validates n >= 0 and alpha > -1; every Laguerre-based operation relies on that.
    """

    def __init__(self, n, alpha):
        """
        :type n: int
        :type alpha: float
        """
        if isinstance(n, bool) or int(n) != n or n < 0:
            raise ParameterDomainError('The degree n must be a non-negative integer (got {}).'.format(n))
        alpha = float(alpha)
        if not alpha > -1 or math.isinf(alpha):
            raise ParameterDomainError('The Laguerre parameter alpha must be a finite number > -1 (got {}).'
                                       .format(alpha))
        self._n = int(n)
        self._alpha = alpha

    @property
    def n(self):
        """
        :rtype: int
        """
        return self._n

    @property
    def alpha(self):
        """
        :rtype: float
        """
        return self._alpha

    @property
    def half_alpha(self):
        """
        :rtype: float
        """
        return self._alpha / 2

    def require_admissible(self):
        """
        Raise unless the wavelet S_n^alpha is admissible; the admissibility integral diverges for alpha <= 0.
        """
        if not self._alpha > 0:
            raise ParameterDomainError('S_{}^{} is not admissible: the admissibility integral diverges for alpha <= 0.'
                                       .format(self._n, self._alpha))

    def to_dict(self):
        """
        :rtype: dict[str, int|float]
        """
        return {'n': self._n, 'alpha': self._alpha}

    def __eq__(self, other):
        return isinstance(other, WaveletOrder) and (self._n, self._alpha) == (other.n, other.alpha)

    def __hash__(self):
        return hash((self._n, self._alpha))

    def __repr__(self):
        return 'WaveletOrder(n={}, alpha={})'.format(self._n, self._alpha)
