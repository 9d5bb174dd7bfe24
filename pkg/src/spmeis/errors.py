"""Exception types shared across the package."""


class SpmEisError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameterError(SpmEisError, ValueError):
    """A physical, grouped or identifiable parameter violates its domain."""


class DegenerateMappingError(SpmEisError, ZeroDivisionError):
    """Parameter-vector mapping hit a zero denominator."""


class SingularStoichiometryError(SpmEisError, ValueError):
    """Stoichiometry of 0 or 1 makes the kinetic term singular."""


class PoleError(SpmEisError, ZeroDivisionError):
    """Transfer function evaluated at its s = 0 pole."""


class ExtrapolationError(SpmEisError, ValueError):
    """Capacity query outside the sampled range of an OCV curve."""


class DatasetError(SpmEisError, ValueError):
    """Inconsistent input dataset (mismatched capacities, duplicate DoDs, ...)."""


class ConfigurationError(SpmEisError, ValueError):
    """Missing or contradictory run configuration."""


class RegressionFailureError(SpmEisError):
    """Intercept regression ran out of points before reaching the R^2 threshold."""

    def __init__(self, message, best_r_squared=float("nan")):
        super().__init__(message)
        self.best_r_squared = best_r_squared


class NonConvergenceError(SpmEisError):
    """Every optimiser start failed to converge."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics if diagnostics is not None else []


class NumericalError(SpmEisError):
    """A solver state became non-finite."""


class FileFormatError(SpmEisError, ValueError):
    """Input file violates its expected format (message carries path:line)."""
