"""Exception types raised by psdkit."""


class PsdkitError(Exception):
    """Base class for all psdkit errors."""


class DimensionError(PsdkitError, ValueError):
    """Matrix shape is unusable: not 2-D, not square, mismatched, or too large."""


class HermiticityError(PsdkitError, ValueError):
    """Input violates the Hermitian residual bound and symmetrize was not requested."""


class NotPsdError(PsdkitError, ValueError):
    """A matrix required to be positive semi-definite is not."""


class NonCommutingError(PsdkitError, ValueError):
    """A family required to commute does not; carries the worst offending pair."""

    def __init__(self, message, pair=None, residual=None):
        super().__init__(message)
        self.pair = pair
        self.residual = residual


class ConvergenceError(PsdkitError, RuntimeError):
    """Iteration failed to converge; carries the final residual."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class MatrixFormatError(PsdkitError, ValueError):
    """A matrix file or stream does not follow the expected schema."""
