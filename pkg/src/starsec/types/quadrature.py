import math

import numpy as np
from numpy.typing import NDArray

from ..errors import QuadratureError
from .base import StarSecType


class QuadRule(StarSecType):
    """Gauss-Laguerre nodes and weights for integrals against ``exp(-z)``.

    Arrays are made read-only so rules can be shared between threads.
    Weights are non-negative; the tail weights of rules near order 200
    underflow to zero in double precision.
    """

    nodes: NDArray[np.float64]
    weights: NDArray[np.float64]

    def __post_init__(self) -> None:
        nodes = np.array(self.nodes, dtype=np.float64)
        weights = np.array(self.weights, dtype=np.float64)
        if nodes.ndim != 1 or nodes.shape != weights.shape or nodes.size == 0:
            raise QuadratureError("nodes and weights must be equal-length 1-D arrays")
        if not np.all(nodes > 0) or not np.all(np.diff(nodes) > 0):
            raise QuadratureError("nodes must be positive and strictly increasing")
        if not np.all(weights >= 0):
            raise QuadratureError("weights must be non-negative")
        total = math.fsum(weights.tolist())
        if abs(total - 1.0) > 1e-10:
            raise QuadratureError(f"weights must sum to 1, got {total!r}")
        nodes.flags.writeable = False
        weights.flags.writeable = False
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @property
    def order(self) -> int:
        return int(self.nodes.size)
