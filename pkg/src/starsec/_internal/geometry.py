import logging
import math

from ..errors import ColocationError, GeometryError
from ..types import LinkDistances, NodeLayout, Position3D
from .constants import COLOCATION_EPS

logger = logging.getLogger(__name__)


def distance(a: Position3D, b: Position3D) -> float:
    """Euclidean distance in meters."""
    return math.hypot(a.x - b.x, a.y - b.y, a.z - b.z)


def ground_distance(uav: Position3D, node: Position3D) -> float:
    """UAV-to-ground link length; the altitude term is the UAV's own z."""
    return math.hypot(node.x - uav.x, node.y - uav.y, uav.z)


def _checked(name: str, value: float) -> float:
    if value < COLOCATION_EPS:
        raise ColocationError(f"{name} = {value!r} m: UAV is colocated with a node")
    return value


def link_distances(layout: NodeLayout, uav: Position3D, pair: int = 0) -> LinkDistances:
    """Distances of NOMA pair ``pair``: its reflect (user, eve) and transmit (user, eve)."""
    if not 0 <= pair < layout.pair_count:
        raise GeometryError(f"pair index {pair} out of range [0, {layout.pair_count})")
    ru, re = layout.reflect_pairs[pair]
    tu, te = layout.transmit_pairs[pair]
    return LinkDistances(
        d_bv=_checked("d_bv", distance(layout.bs, uav)),
        d_vu_r=_checked("d_vu_r", ground_distance(uav, layout.reflect_users[ru])),
        d_vu_t=_checked("d_vu_t", ground_distance(uav, layout.transmit_users[tu])),
        d_ve_r=_checked("d_ve_r", ground_distance(uav, layout.reflect_eves[re])),
        d_ve_t=_checked("d_ve_t", ground_distance(uav, layout.transmit_eves[te])),
    )
