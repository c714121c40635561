from enum import Enum


class EvePhaseModel(Enum):
    """How the eavesdropper's effective phase error is drawn in simulation."""

    WRAPPED_NORMAL_APPROX = "approx"
    EXACT_UNIFORM = "exact"
