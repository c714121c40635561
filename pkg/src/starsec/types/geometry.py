import math
from typing import Tuple

from ..errors import ColocationError, ConfigValueError
from .base import StarSecType

Pairing = Tuple[int, int]


class Position3D(StarSecType):
    """Cartesian position in meters."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ConfigValueError(name, f"coordinate must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.x, self.y, self.z)


class NodeLayout(StarSecType):
    """BS and ground nodes; NOMA pair ``n`` combines ``reflect_pairs[n]`` and ``transmit_pairs[n]``."""

    bs: Position3D
    reflect_users: Tuple[Position3D, ...]
    transmit_users: Tuple[Position3D, ...]
    reflect_eves: Tuple[Position3D, ...]
    transmit_eves: Tuple[Position3D, ...]
    reflect_pairs: Tuple[Pairing, ...]
    transmit_pairs: Tuple[Pairing, ...]

    def __post_init__(self) -> None:
        groups = {
            "layout.reflect_users": self.reflect_users,
            "layout.transmit_users": self.transmit_users,
            "layout.reflect_eves": self.reflect_eves,
            "layout.transmit_eves": self.transmit_eves,
        }
        for field, nodes in groups.items():
            object.__setattr__(self, field.split(".")[1], tuple(nodes))
            if not nodes:
                raise ConfigValueError(field, "each region needs at least one node")
            for node in nodes:
                if node.z < 0:
                    raise ConfigValueError(field, f"ground node below ground: {node.as_tuple()}")

        reflect_set = {n.as_tuple() for n in (*self.reflect_users, *self.reflect_eves)}
        transmit_set = {n.as_tuple() for n in (*self.transmit_users, *self.transmit_eves)}
        shared = reflect_set & transmit_set
        if shared:
            raise ConfigValueError(
                "layout", f"nodes assigned to both regions: {sorted(shared)}"
            )

        self._check_pairs("layout.reflect_pairs", self.reflect_pairs, self.reflect_users, self.reflect_eves)
        self._check_pairs("layout.transmit_pairs", self.transmit_pairs, self.transmit_users, self.transmit_eves)
        if len(self.reflect_pairs) != len(self.transmit_pairs):
            raise ConfigValueError(
                "layout.transmit_pairs",
                f"{len(self.transmit_pairs)} transmit pairs for {len(self.reflect_pairs)} reflect pairs",
            )

    def _check_pairs(
        self,
        field: str,
        pairs: Tuple[Pairing, ...],
        users: Tuple[Position3D, ...],
        eves: Tuple[Position3D, ...],
    ) -> None:
        normalized = tuple((int(u), int(e)) for u, e in pairs)
        object.__setattr__(self, field.split(".")[1], normalized)
        if not normalized:
            raise ConfigValueError(field, "at least one (user, eve) pair is required")
        for user_idx, eve_idx in normalized:
            if not 0 <= user_idx < len(users):
                raise ConfigValueError(field, f"user index {user_idx} out of range")
            if not 0 <= eve_idx < len(eves):
                raise ConfigValueError(field, f"eve index {eve_idx} out of range")

    @property
    def pair_count(self) -> int:
        return len(self.reflect_pairs)


class LinkDistances(StarSecType):
    """Link lengths in meters for one NOMA pair."""

    d_bv: float
    d_vu_r: float
    d_vu_t: float
    d_ve_r: float
    d_ve_t: float

    def __post_init__(self) -> None:
        for name in ("d_bv", "d_vu_r", "d_vu_t", "d_ve_r", "d_ve_t"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ColocationError(f"{name} must be positive and finite, got {value!r}")
