from .base import StarSecError


class OptimizationError(StarSecError):
    """Invalid search box or optimizer settings."""
    pass


class ValidationFailure(StarSecError):
    """One or more validation checks failed."""
    pass


class OutputError(StarSecError):
    """Result artifacts could not be written."""
    pass
