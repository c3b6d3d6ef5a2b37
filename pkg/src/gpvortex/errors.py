"""Exception types shared across the package."""


class GpVortexError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(GpVortexError, ValueError):
    """An argument violates a documented precondition."""


class SingularPointError(GpVortexError):
    """Evaluation requested at a singular point (e.g. the Green function at 0)."""


class SingularConfigurationError(GpVortexError):
    """A vortex configuration with coincident points."""


class ResolutionError(GpVortexError):
    """Grid too coarse for the requested accuracy or healing length."""


class ConstructionError(GpVortexError):
    """Phase reconstruction produced an inconsistent winding structure."""


class SolverError(GpVortexError):
    """An iterative solver failed to converge."""


class BlowUpError(GpVortexError):
    """Time integration produced non-finite or runaway field values."""

    def __init__(self, message: str, step_index: int | None = None):
        super().__init__(message)
        self.step_index = step_index


class IncomparableConfigsError(GpVortexError):
    """Vortex configurations with different degree multisets cannot be matched."""


class AmbiguousMatchingError(GpVortexError):
    """Two near-optimal assignments are indistinguishable within tolerance."""


class SpuriousDetectionError(GpVortexError):
    """Vortex detection found a structure inconsistent with an isolated core."""


class TrackingError(GpVortexError):
    """Frame-to-frame identity assignment violated its preconditions."""


class CacheFormatError(GpVortexError):
    """A binary cache or snapshot file failed validation."""


class ConfigError(GpVortexError, ValueError):
    """Experiment configuration file is invalid."""


class DependencyError(GpVortexError):
    """A command requires artifacts that are missing."""
