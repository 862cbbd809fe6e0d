import numpy as np


def scalar_or_array(values):
    """
    Unwrap zero-dimensional numpy results so that scalar inputs produce Python scalars.

    :type values: numpy.ndarray | numpy.generic | complex | float
    :rtype: numpy.ndarray | complex | float
    """
    if isinstance(values, (np.ndarray, np.generic)) and np.ndim(values) == 0:
        return values.item()
    return values


def principal_power(base, exponent):
    """
    Principal-branch power base**exponent for complex scalars or arrays. The argument of the base is taken in
    (-pi, pi], so a negative real base with a +0.0 imaginary part has argument pi.

    :type base: complex | numpy.ndarray
    :type exponent: float | complex
    :rtype: complex | numpy.ndarray
    """
    base = np.asarray(base, dtype=complex)
    return scalar_or_array(np.exp(exponent * np.log(base)))
