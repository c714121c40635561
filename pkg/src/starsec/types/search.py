import math
from typing import Tuple

from ..errors import OptimizationError
from .base import StarSecType
from .enums import ObjectiveKind
from .geometry import Position3D

WEIGHT_TOLERANCE = 1e-9


def check_weights(w1: float, w2: float, field: str = "weights") -> None:
    """Enforce w1 + w2 = 1, w1, w2 in [0, 1], w1 <= w2."""
    if not (0.0 <= w1 <= 1.0 and 0.0 <= w2 <= 1.0):
        raise OptimizationError(f"{field}: w1={w1!r}, w2={w2!r} must lie in [0, 1]")
    if abs(w1 + w2 - 1.0) > WEIGHT_TOLERANCE:
        raise OptimizationError(f"{field}: w1 + w2 must equal 1, got {w1 + w2!r}")
    if w1 > w2 + WEIGHT_TOLERANCE:
        raise OptimizationError(f"{field}: w1 must not exceed w2, got {w1!r} > {w2!r}")


class SearchBox(StarSecType):
    """UAV placement bounds in meters and grid step."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    z_min: float
    z_max: float
    step: float = 1.0

    def __post_init__(self) -> None:
        for axis in ("x", "y", "z"):
            lo = getattr(self, f"{axis}_min")
            hi = getattr(self, f"{axis}_max")
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise OptimizationError(f"search.{axis}: bounds must be finite")
            if lo > hi:
                raise OptimizationError(f"search.{axis}: min {lo!r} exceeds max {hi!r}")
        if not (math.isfinite(self.step) and self.step > 0):
            raise OptimizationError(f"search.step must be positive, got {self.step!r}")

    def bounds(self, axis: str) -> Tuple[float, float]:
        return getattr(self, f"{axis}_min"), getattr(self, f"{axis}_max")

    @classmethod
    def collapsed(cls, point: Position3D, step: float = 1.0) -> "SearchBox":
        return cls(
            x_min=point.x, x_max=point.x,
            y_min=point.y, y_max=point.y,
            z_min=point.z, z_max=point.z,
            step=step,
        )


class OptimizerSettings(StarSecType):
    """Tolerances and iteration caps of the placement / power-split search."""

    eps_position: float = 1e-3
    k_max: int = 50
    eps_zeta: float = 1e-4
    n_max_gss: int = 100
    w1: float = 0.45
    w2: float = 0.55
    n_jobs: int = 1
    objective: ObjectiveKind = ObjectiveKind.CLOSED_FORM
    optimize_zeta: bool = True

    def __post_init__(self) -> None:
        if not self.eps_position > 0:
            raise OptimizationError(f"eps_position must be positive, got {self.eps_position!r}")
        if not self.eps_zeta > 0:
            raise OptimizationError(f"eps_zeta must be positive, got {self.eps_zeta!r}")
        if self.k_max < 1:
            raise OptimizationError(f"k_max must be >= 1, got {self.k_max!r}")
        if self.n_max_gss < 1:
            raise OptimizationError(f"n_max_gss must be >= 1, got {self.n_max_gss!r}")
        if self.n_jobs == 0:
            raise OptimizationError("n_jobs must be non-zero")
        check_weights(self.w1, self.w2, "optimizer")


class OptResult(StarSecType):
    uav_star: Position3D
    zeta_star: float
    wssr_star: float
    iterations: int
    trace: Tuple[Tuple[int, float], ...]
