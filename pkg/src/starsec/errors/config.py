from typing import Optional

from .base import StarSecError


class ConfigError(StarSecError):
    """Scenario configuration errors."""
    pass


class ConfigParseError(ConfigError):
    """Scenario file could not be parsed."""

    def __init__(self, path: str, message: str, line: Optional[int] = None) -> None:
        self.path = path
        self.line = line
        where = f"{path}:{line}" if line is not None else path
        super().__init__(f"{where}: {message}")


class ConfigValueError(ConfigError):
    """A configuration value violates its invariant."""

    def __init__(self, field: str, message: str) -> None:
        self.field = field
        super().__init__(f"{field}: {message}")
