from .base import StarSecError
from .config import ConfigError, ConfigParseError, ConfigValueError
from .geometry import ColocationError, GeometryError
from .numerics import DistributionError, NumericalError, QuadratureError
from .runtime import OptimizationError, OutputError, ValidationFailure

__all__ = (
    "StarSecError",
    "ConfigError",
    "ConfigParseError",
    "ConfigValueError",
    "GeometryError",
    "ColocationError",
    "NumericalError",
    "DistributionError",
    "QuadratureError",
    "OptimizationError",
    "ValidationFailure",
    "OutputError",
)
