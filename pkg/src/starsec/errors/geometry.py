from .base import StarSecError


class GeometryError(StarSecError):
    """Invalid node layout or position."""
    pass


class ColocationError(GeometryError):
    """UAV colocated with a BS or ground node."""
    pass
