import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from ._internal.closed_form import mean_report, secrecy_report
from ._internal.config_loader import ScenarioLoader, default_sections
from ._internal.experiments import run_optimize, run_series, run_validate
from ._internal.mappers import ScenarioMapper
from ._internal.monte_carlo import simulate_rates
from .types import (
    CheckResult,
    EvePhaseModel,
    OptimizerSettings,
    OptResult,
    Position3D,
    RateEstimates,
    ScenarioConfig,
    SearchBox,
    SecrecyReport,
    SweepSeries,
    SweepSpec,
)

logger = logging.getLogger(__name__)


class SecrecyClient:
    """Entry point composing the analytic, simulation and optimization engines for one scenario."""

    def __init__(
        self,
        config: str | Path | ScenarioConfig,
        seed: Optional[int] = None,
        trials: Optional[int] = None,
        eve_model: Optional[EvePhaseModel] = None,
        debug: bool = False,
    ) -> None:
        self._mapper = ScenarioMapper()
        self._loader: Optional[ScenarioLoader] = None
        if isinstance(config, ScenarioConfig):
            self._config = config
        else:
            self._loader = ScenarioLoader(config, self._mapper)
            self._config = self._loader.load()

        self._debug = debug
        if debug:
            logging.getLogger("starsec").setLevel(logging.DEBUG)

        self._configure_mc(seed, trials, eve_model)

    def _configure_mc(
        self, seed: Optional[int], trials: Optional[int], eve_model: Optional[EvePhaseModel]
    ) -> None:
        changes: Dict[str, Any] = {}
        if seed is not None:
            changes["seed"] = seed
        if trials is not None:
            changes["trials"] = trials
        if eve_model is not None:
            changes["eve_phase_model"] = eve_model
        if changes:
            self._config = self._config.with_mc(**changes)

    @property
    def config(self) -> ScenarioConfig:
        return self._config

    def search(self) -> Tuple[SearchBox, OptimizerSettings]:
        """Search box and optimizer settings from the ``[search]`` section, or defaults."""
        if self._loader is not None:
            return self._loader.load_search(self._config)
        return self._mapper.search_from_dict(default_sections()["search"], self._config)

    def report(
        self, uav: Optional[Position3D] = None, zeta: Optional[float] = None, pair: Optional[int] = None
    ) -> SecrecyReport:
        """Analytic report at ``uav``/``zeta`` (configured by default); pair-averaged unless ``pair`` is given."""
        uav = uav or self._config.uav
        zeta = self._config.power.zeta if zeta is None else zeta
        if pair is None:
            return mean_report(self._config, uav, zeta)
        return secrecy_report(self._config, uav, zeta, pair)

    def simulate(
        self, uav: Optional[Position3D] = None, zeta: Optional[float] = None, pair: int = 0
    ) -> RateEstimates:
        uav = uav or self._config.uav
        zeta = self._config.power.zeta if zeta is None else zeta
        return simulate_rates(self._config, uav, zeta, pair=pair)

    def sweep(
        self,
        spec: SweepSpec,
        out_dir: str | Path,
        with_mc: bool = False,
        series: Optional[SweepSeries] = None,
    ) -> List[Path]:
        return run_series(self._config, spec, series, with_mc, Path(out_dir))

    def optimize(
        self,
        out_dir: str | Path,
        box: Optional[SearchBox] = None,
        settings: Optional[OptimizerSettings] = None,
    ) -> OptResult:
        default_box, default_settings = self.search()
        result, _, _ = run_optimize(
            self._config, box or default_box, settings or default_settings, Path(out_dir)
        )
        return result

    def validate(self, out_dir: str | Path, spread_scale: float = 1.0) -> Tuple[bool, List[CheckResult], Path]:
        _, settings = self.search()
        results, path = run_validate(self._config, Path(out_dir), settings, spread_scale)
        return all(r.passed for r in results), results, path

    def show_config(self) -> Dict[str, Dict[str, Any]]:
        return self._mapper.scenario_to_dict(self._config)
