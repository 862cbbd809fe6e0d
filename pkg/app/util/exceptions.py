class LwframesError(Exception):
    """
    Base class for all errors raised by the numerical modules. The exit_code attribute is the process exit code that
    the UnhandledExceptionHandler uses when one of these errors escapes a subcommand.
    """
    exit_code = 1


class ParameterDomainError(LwframesError):
    """
    A parameter is outside the domain of the requested operation. Example: a Laguerre parameter alpha <= -1, or a
    point z with Im z <= 0 passed to an operation defined on the upper half-plane.
    """
    exit_code = 2


class ConfigurationError(LwframesError):
    """
    A run configuration is malformed or inconsistent. Example: a quadrature order below the degree budget of the
    analysed basis, or an unknown key in an experiment file.
    """
    exit_code = 2


class DegenerateInputError(LwframesError):
    """
    The input is valid but too degenerate for the requested quantity to be meaningful. Example: the separation
    constant of a sequence with fewer than two points.
    """
    exit_code = 2


class ContractError(LwframesError):
    """
    A caller violated a structural precondition. Example: a non-Hermitian matrix passed to the Hermitian eigensolver.
    """


class StepSizeError(LwframesError):
    """
    Finite-difference estimates at step h and h/2 disagree, so the step is either too large (truncation error) or
    too small (cancellation).
    """


class InvariantFailure(LwframesError):
    """
    One or more verification suites did not meet their tolerance.
    """


class CoverageError(LwframesError):
    """
    A pseudohyperbolic ball used for density estimation is not fully populated by the sequence.
    """
    exit_code = 3

    def __init__(self, message, grid_point=None):
        """
        :type message: str
        :param grid_point: the offending evaluation point (disc chart)
        :type grid_point: complex | None
        """
        super().__init__(message)
        self.grid_point = grid_point


class ConvergenceError(LwframesError):
    """
    An iterative procedure hit its iteration cap before meeting its tolerance. Example: the QL eigenvalue iteration,
    the Jacobi sweeps, or the automatic extension of a truncated lattice.
    """
    exit_code = 3
