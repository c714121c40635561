import copy
import logging
import re
import tomllib
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple

from typing_extensions import override

from ..errors import ConfigParseError
from ..types import OptimizerSettings, ScenarioConfig, SearchBox
from .constants import (
    DEFAULT_ALPHA,
    DEFAULT_CHUNK_SIZE,
    DEFAULT_ELEMENTS,
    DEFAULT_EPS_POSITION,
    DEFAULT_EPS_ZETA,
    DEFAULT_GRID_STEP,
    DEFAULT_K_MAX,
    DEFAULT_KAPPA,
    DEFAULT_N0_DBM,
    DEFAULT_N_MAX_GSS,
    DEFAULT_NAKAGAMI_M,
    DEFAULT_QUAD_ORDER,
    DEFAULT_RHO,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    DEFAULT_W1,
    DEFAULT_W2,
    DEFAULT_ZETA,
    Messages,
)
from .interfaces import IConfigSource
from .mappers import ScenarioMapper

logger = logging.getLogger(__name__)

_LINE_RE = re.compile(r"at line (\d+)")

Sections = Dict[str, Dict[str, Any]]


def default_sections() -> Sections:
    """Default values of every optional scenario key, by section."""
    return {
        "layout": {},
        "fading": {"m": DEFAULT_NAKAGAMI_M},
        "power": {
            "n0_dbm": DEFAULT_N0_DBM,
            "rho": DEFAULT_RHO,
            "zeta": DEFAULT_ZETA,
            "alpha": DEFAULT_ALPHA,
        },
        "phase": {"kappa": DEFAULT_KAPPA},
        "system": {"elements": DEFAULT_ELEMENTS, "w1": DEFAULT_W1, "w2": DEFAULT_W2},
        "quadrature": {"order": DEFAULT_QUAD_ORDER, "method": "auto", "gamma_fit": "coherent"},
        "monte_carlo": {
            "trials": DEFAULT_TRIALS,
            "seed": DEFAULT_SEED,
            "eve_model": "approx",
            "n_jobs": 1,
            "chunk_size": DEFAULT_CHUNK_SIZE,
        },
        "search": {
            "step": DEFAULT_GRID_STEP,
            "eps_position": DEFAULT_EPS_POSITION,
            "k_max": DEFAULT_K_MAX,
            "eps_zeta": DEFAULT_EPS_ZETA,
            "n_max_gss": DEFAULT_N_MAX_GSS,
            "n_jobs": 1,
            "objective": "closed_form",
        },
    }


class ScenarioLoader(IConfigSource):
    """TOML scenario source; file sections are merged over the defaults."""

    def __init__(self, path: str | Path, mapper: Optional[ScenarioMapper] = None) -> None:
        self._path = Path(path)
        self._mapper = mapper or ScenarioMapper()
        self._data: Optional[Sections] = None

    def _get_defaults(self) -> Sections:
        return default_sections()

    def _read(self) -> Dict[str, Any]:
        logger.info(Messages.LOADING_CONFIG, self._path)
        try:
            text = self._path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigParseError(str(self._path), f"cannot read scenario: {exc.strerror or exc}") from exc
        try:
            return tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            line = getattr(exc, "lineno", None)
            if line is None:
                match = _LINE_RE.search(str(exc))
                line = int(match.group(1)) if match else None
            raise ConfigParseError(str(self._path), str(exc), line) from exc

    @override
    def raw(self) -> Mapping[str, Any]:
        if self._data is None:
            data = self._get_defaults()
            for section, values in self._read().items():
                if not isinstance(values, dict):
                    raise ConfigParseError(str(self._path), f"[{section}] must be a table")
                for key, value in data.get(section, {}).items():
                    if key not in values:
                        logger.debug(Messages.CONFIG_DEFAULT, f"{section}.{key}", value)
                data.setdefault(section, {}).update(values)
            self._data = data
        return copy.deepcopy(self._data)

    @override
    def load(self) -> ScenarioConfig:
        cfg = self._mapper.scenario_from_dict(self.raw())
        logger.info(
            Messages.CONFIG_LOADED,
            cfg.elements,
            cfg.phase.kappa,
            cfg.power.rho,
            cfg.power.zeta,
            cfg.layout.pair_count,
        )
        return cfg

    def load_search(self, cfg: Optional[ScenarioConfig] = None) -> Tuple[SearchBox, OptimizerSettings]:
        cfg = cfg or self.load()
        return self._mapper.search_from_dict(self.raw()["search"], cfg)


def load_config(path: str | Path) -> ScenarioConfig:
    """Load and validate a scenario file."""
    return ScenarioLoader(path).load()
