"""Exception hierarchy shared across the package."""


class StarweylError(Exception):
    """Base class for all package errors."""


class OrderMismatchError(StarweylError):
    """Two symbols with different variable orders were combined."""


class DimensionError(StarweylError):
    """A vector or matrix has the wrong length for the phase space."""


class InvalidAlgebraError(StarweylError):
    """Deformation constants violate theta*zeta < hbar**2 (or hbar <= 0)."""


class DegenerateAlgebraError(StarweylError):
    """A constraint denominator vanished for the given deformation constants."""


class BranchFailureError(StarweylError):
    """A squeeze parameter left the domain of artanh.

    Carries a ``diagnostics`` dict with the offending intermediate values.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class UnsupportedSymbolError(StarweylError):
    """Symbol degree exceeds what the operation supports."""


class NonHermitianSymbolError(StarweylError):
    """A real symbol was required but complex coefficients were found."""


class NonConvergenceError(StarweylError):
    """Eigenvalues failed to stabilise below the basis-size cap."""


class SliceError(StarweylError):
    """A linear map does not close on the requested single-mode section."""


class DomainError(StarweylError):
    """An integrand is not integrable on the given grid."""


class GridSpanError(StarweylError):
    """A phase-space grid does not capture the state's probability mass."""


class HamParseError(StarweylError):
    """Syntax or semantic error in a Hamiltonian expression.

    ``line`` and ``column`` are 1-based; ``expected`` is a sorted tuple of
    token descriptions for syntax errors.
    """

    def __init__(self, message, line, column, expected=()):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.expected = tuple(expected)


class ConfigError(StarweylError):
    """Invalid or unknown entry in a run-configuration file."""
