from .eve_phase_model import EvePhaseModel
from .gamma_fit import GammaFit
from .objective_kind import ObjectiveKind
from .quad_method import QuadMethod
from .region import Region
from .sweep_variable import SweepVariable

__all__ = (
    "EvePhaseModel",
    "GammaFit",
    "ObjectiveKind",
    "QuadMethod",
    "Region",
    "SweepVariable",
)
