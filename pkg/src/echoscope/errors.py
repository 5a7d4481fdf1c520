"""Exception types raised across the echoscope pipeline."""


class EchoscopeError(Exception):
    """Base class for all echoscope errors."""


class ConfigurationError(EchoscopeError):
    """A config value, adapter registration, or format tag is invalid."""


class DataQualityError(EchoscopeError):
    """Too many malformed records in an input file."""

    def __init__(self, message, *, skipped=0, total=0):
        super().__init__(message)
        self.skipped = skipped
        self.total = total


class UrlParseError(EchoscopeError):
    """A raw string could not be normalized into a URL."""


class DomainResolutionError(EchoscopeError):
    """Host has no registrable domain (bare public suffix or IP literal)."""


class CatalogSchemaError(EchoscopeError):
    """Source catalog file is missing required columns."""


class EmptyCatalogError(EchoscopeError):
    """Source catalog file contained zero valid rows."""


class UnscoredBiasError(EchoscopeError):
    """A numeric score was requested for the 'unreported' bias category."""


class InternalConsistencyError(EchoscopeError):
    """An upstream filter contract was violated (e.g. a self-link survived)."""


class EmptyGraphError(EchoscopeError):
    """Graph analytics requested on a graph with zero total weight."""


class ConvergenceError(EchoscopeError):
    """Power iteration did not converge within the iteration budget."""

    def __init__(self, message, *, residual, iterations):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class EmptyProfileError(EchoscopeError):
    """A diet profile or leaning distribution was requested for zero records."""


class UndefinedFractionError(EchoscopeError):
    """Questionable fraction is undefined (zero catalog-labeled URLs)."""


class UndefinedSimilarityError(EchoscopeError):
    """Cosine similarity is undefined (at least one all-zero vector)."""


class PipelineError(EchoscopeError):
    """A pipeline stage failed; carries the stage name for provenance."""

    def __init__(self, message, *, stage):
        super().__init__(message)
        self.stage = stage
