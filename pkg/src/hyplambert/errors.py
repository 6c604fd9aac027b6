"""Exception types raised by the library."""


class HypLambertError(Exception):
    """Base class for all library errors."""


class DomainError(HypLambertError, ValueError):
    """An argument lies outside the domain of the operation."""


class DegenerateQuadruple(HypLambertError, ValueError):
    """Two points of an absolute-ratio quadruple coincide."""


class CoincidentPoints(HypLambertError, ValueError):
    """An operation that needs two distinct points received equal ones."""


class InsufficientSamples(HypLambertError, ValueError):
    """Too few samples, or abscissae not strictly increasing."""


class VerificationFailure(HypLambertError, AssertionError):
    """A sampled inequality or identity was violated.

    Attributes
    ----------
    check : str
        Name of the violated check.
    r : float or None
        Parameter value at which the violation occurred.
    residual : float
        Signed size of the violation.
    """

    def __init__(self, check, r, residual):
        self.check = check
        self.r = r
        self.residual = residual
        super().__init__(f"{check} violated at r={r!r} (residual {residual:.3e})")
