import math

from app.util.exceptions import ParameterDomainError


# Lanczos approximation with g = 7 and nine coefficients; relative accuracy is about 1e-15 on (0, 171].
_LANCZOS_G = 7
_LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2 * math.pi)


def _lanczos_series(x):
    """
    :param x: the shifted argument (the Gamma argument minus one)
    :type x: float
    :rtype: float
    """
    series = _LANCZOS_COEFFICIENTS[0]
    for index, coefficient in enumerate(_LANCZOS_COEFFICIENTS[1:], start=1):
        series += coefficient / (x + index)
    return series


def _raise_on_pole(x):
    if x <= 0 and x == math.floor(x):
        raise ParameterDomainError('Gamma has a pole at x={}.'.format(x))


def gamma_value(x):
    """
    Evaluate the Gamma function at a real argument. Arguments below 1/2 go through the reflection formula.

    :type x: float
    :rtype: float
    """
    x = float(x)
    _raise_on_pole(x)
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma_value(1.0 - x))

    shifted = x - 1.0
    base = shifted + _LANCZOS_G + 0.5
    # split the power so that the intermediate result only overflows when Gamma itself does
    half_power = base ** ((shifted + 0.5) / 2)
    return math.sqrt(2 * math.pi) * half_power * (half_power * math.exp(-base)) * _lanczos_series(shifted)


def log_gamma(x):
    """
    Natural logarithm of Gamma for positive arguments, usable far beyond the overflow point of gamma_value.

    :type x: float
    :rtype: float
    """
    x = float(x)
    if not x > 0:
        raise ParameterDomainError('log_gamma is only defined here for x > 0 (got {}).'.format(x))
    if x < 0.5:
        return math.log(gamma_value(x))
    shifted = x - 1.0
    base = shifted + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (shifted + 0.5) * math.log(base) - base + math.log(_lanczos_series(shifted))


def pochhammer(a, k):
    """
    Rising factorial (a)_k = a (a+1) ... (a+k-1). The empty product (k = 0) is 1.

    :type a: float
    :type k: int
    :rtype: float
    """
    if int(k) != k or k < 0:
        raise ParameterDomainError('The Pochhammer index must be a non-negative integer (got {}).'.format(k))
    product = 1.0
    for index in range(int(k)):
        product *= a + index
    return product


def gamma_ratio(numerator, denominator):
    """
    Gamma(numerator) / Gamma(denominator) for positive arguments, through log_gamma so that large arguments do not
    overflow.

    :type numerator: float
    :type denominator: float
    :rtype: float
    """
    return math.exp(log_gamma(numerator) - log_gamma(denominator))
