from .base import StarSecType
from .channel import FadingParams, GammaChannelParams, PhaseErrorModel
from .enums import EvePhaseModel, GammaFit, ObjectiveKind, QuadMethod, Region, SweepVariable
from .geometry import LinkDistances, NodeLayout, Position3D
from .power import PowerConfig, SnrConstants
from .quadrature import QuadRule
from .reports import CheckResult, Estimate, RateEstimates, SecrecyReport
from .scenario import McSettings, ScenarioConfig, SweepSeries, SweepSpec
from .search import OptimizerSettings, OptResult, SearchBox

__all__ = (
    "StarSecType",
    "Position3D",
    "NodeLayout",
    "LinkDistances",
    "PhaseErrorModel",
    "FadingParams",
    "GammaChannelParams",
    "PowerConfig",
    "SnrConstants",
    "QuadRule",
    "SecrecyReport",
    "Estimate",
    "CheckResult",
    "RateEstimates",
    "McSettings",
    "ScenarioConfig",
    "SweepSpec",
    "SweepSeries",
    "SearchBox",
    "OptimizerSettings",
    "OptResult",
    "EvePhaseModel",
    "GammaFit",
    "ObjectiveKind",
    "QuadMethod",
    "Region",
    "SweepVariable",
)
