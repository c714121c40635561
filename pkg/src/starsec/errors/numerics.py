from .base import StarSecError


class NumericalError(StarSecError):
    """Base numerical error."""
    pass


class DistributionError(NumericalError):
    """Invalid distribution parameters."""
    pass


class QuadratureError(NumericalError):
    """Invalid quadrature rule or integration failure."""
    pass
