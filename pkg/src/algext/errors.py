"""Exception types raised by the engine."""


class AlgebraError(Exception):
    """Base class for all structured errors raised by this package."""


class ShapeError(AlgebraError):
    """An element does not have the shape required by its algebra."""


class NormParamError(AlgebraError):
    """A supplied norm parameter violates t^n >= sum |a_k| t^k.

    Carries the (negative) slack so callers can report how badly the
    inequality fails.
    """

    def __init__(self, message, slack):
        super().__init__(f"{message} (slack {slack:.6g})")
        self.slack = slack


class RootResidualError(AlgebraError):
    """A designated root fails its defining-equation residual bound."""

    def __init__(self, message, residual):
        super().__init__(f"{message} (residual {residual:.6g})")
        self.residual = residual


class RootFindingError(AlgebraError):
    """Neither root-finding method converged; echoes the polynomial."""

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)
        super().__init__(
            "root finding failed for monic polynomial with coefficients "
            f"{self.coeffs}"
        )


class NotSeparatedError(AlgebraError):
    """Sampled generators fail to separate the points of a space."""


class SpecFileError(AlgebraError):
    """A spec document is malformed; carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
