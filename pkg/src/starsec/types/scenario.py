from typing import Tuple

from ..errors import ConfigValueError, StarSecError
from .base import StarSecType
from .channel import FadingParams, PhaseErrorModel
from .enums import EvePhaseModel, GammaFit, QuadMethod, SweepVariable
from .geometry import NodeLayout, Position3D
from .power import PowerConfig
from .reports import RATE_FIELDS, REPORT_FIELDS
from .search import check_weights

MAX_QUAD_ORDER = 200
MAX_SEED = 2**64 - 1


class McSettings(StarSecType):
    """Monte Carlo run controls."""

    trials: int
    seed: int
    eve_phase_model: EvePhaseModel = EvePhaseModel.WRAPPED_NORMAL_APPROX
    n_jobs: int = 1
    chunk_size: int = 4096

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ConfigValueError("monte_carlo.trials", f"must be >= 1, got {self.trials!r}")
        if not 0 <= self.seed <= MAX_SEED:
            raise ConfigValueError("monte_carlo.seed", f"must be an unsigned 64-bit integer, got {self.seed!r}")
        if self.n_jobs == 0:
            raise ConfigValueError("monte_carlo.n_jobs", "must be non-zero")
        if self.chunk_size < 1:
            raise ConfigValueError("monte_carlo.chunk_size", f"must be >= 1, got {self.chunk_size!r}")


class ScenarioConfig(StarSecType):
    """Full deployment: geometry, fading, power, phase error, element count and numerics."""

    layout: NodeLayout
    uav: Position3D
    fading: FadingParams
    power: PowerConfig
    phase: PhaseErrorModel
    elements: int
    w1: float
    w2: float
    quad_order: int
    mc: McSettings
    quad_method: QuadMethod = QuadMethod.AUTO
    gamma_fit: GammaFit = GammaFit.COHERENT

    def __post_init__(self) -> None:
        if self.elements < 1:
            raise ConfigValueError("system.elements", f"must be >= 1, got {self.elements!r}")
        if not 1 <= self.quad_order <= MAX_QUAD_ORDER:
            raise ConfigValueError(
                "quadrature.order", f"must lie in [1, {MAX_QUAD_ORDER}], got {self.quad_order!r}"
            )
        try:
            check_weights(self.w1, self.w2, "system")
        except StarSecError as exc:
            raise ConfigValueError("system.w1", str(exc)) from exc

    def with_power(self, **changes: float) -> "ScenarioConfig":
        return self.replace(power=self.power.replace(**changes))

    def with_zeta(self, zeta: float) -> "ScenarioConfig":
        return self.with_power(zeta=zeta)

    def with_kappa(self, kappa: float) -> "ScenarioConfig":
        return self.replace(phase=PhaseErrorModel(kappa=kappa))

    def with_elements(self, elements: int) -> "ScenarioConfig":
        return self.replace(elements=int(elements))

    def with_weights(self, w1: float, w2: float) -> "ScenarioConfig":
        return self.replace(w1=w1, w2=w2)

    def with_mc(self, **changes: object) -> "ScenarioConfig":
        return self.replace(mc=self.mc.replace(**changes))

    def with_variable(self, variable: SweepVariable, value: float) -> "ScenarioConfig":
        """Copy with one swept quantity set to ``value``."""
        if variable is SweepVariable.PS_DBM:
            return self.with_power(ps_dbm=float(value))
        if variable is SweepVariable.M:
            return self.with_elements(int(round(value)))
        if variable is SweepVariable.KAPPA:
            return self.with_kappa(float(value))
        return self.with_zeta(float(value))


class SweepSpec(StarSecType):
    """One swept variable, its values, and the metrics to tabulate."""

    variable: SweepVariable
    values: Tuple[float, ...]
    outputs: Tuple[str, ...] = ("r_sec_r", "r_sec_t", "wssr")

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        if not self.values:
            raise ConfigValueError("sweep.values", "at least one value is required")
        if not self.outputs:
            raise ConfigValueError("sweep.outputs", "at least one metric is required")
        known = set(REPORT_FIELDS) | set(RATE_FIELDS)
        for name in self.outputs:
            if name not in known:
                raise ConfigValueError("sweep.outputs", f"unknown metric {name!r}")


SERIES_NAMES: Tuple[str, ...] = ("kappa", "ps_dbm", "elements", "zeta", "w1")


class SweepSeries(StarSecType):
    """A second parameter held at each of ``values`` in turn, one sweep per value.

    ``w1`` series set ``w2 = 1 - w1``.
    """

    name: str
    values: Tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if self.name not in SERIES_NAMES:
            raise ConfigValueError("series", f"unknown series {self.name!r}, expected one of {SERIES_NAMES}")
        if not self.values:
            raise ConfigValueError("series", "at least one value is required")

    def apply(self, cfg: ScenarioConfig, value: float) -> ScenarioConfig:
        if self.name == "kappa":
            return cfg.with_kappa(value)
        if self.name == "ps_dbm":
            return cfg.with_power(ps_dbm=value)
        if self.name == "elements":
            return cfg.with_elements(int(round(value)))
        if self.name == "zeta":
            return cfg.with_zeta(value)
        return cfg.with_weights(value, 1.0 - value)
