from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Tuple, Type, TypeVar

from ..errors import ConfigValueError, OptimizationError
from ..types import (
    EvePhaseModel,
    FadingParams,
    GammaFit,
    McSettings,
    NodeLayout,
    ObjectiveKind,
    OptimizerSettings,
    PhaseErrorModel,
    Position3D,
    PowerConfig,
    QuadMethod,
    ScenarioConfig,
    SearchBox,
)
from ..types.geometry import Pairing

E = TypeVar("E", bound=Enum)
Section = Mapping[str, Any]


def _number(field: str, value: Any) -> float:
    if value is None:
        raise ConfigValueError(field, "required")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigValueError(field, f"expected a number, got {value!r}")
    return float(value)


def _integer(field: str, value: Any) -> int:
    if value is None:
        raise ConfigValueError(field, "required")
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigValueError(field, f"expected an integer, got {value!r}")
    return value


def _enum(field: str, enum: Type[E], value: Any) -> E:
    try:
        return enum(value)
    except ValueError:
        choices = ", ".join(repr(e.value) for e in enum)
        raise ConfigValueError(field, f"expected one of {choices}, got {value!r}") from None


class ScenarioMapper:
    """Maps parsed scenario sections to typed objects and back."""

    def position_from_list(self, field: str, value: Any) -> Position3D:
        if not isinstance(value, (list, tuple)) or len(value) != 3:
            raise ConfigValueError(field, f"expected [x, y, z], got {value!r}")
        x, y, z = (_number(field, v) for v in value)
        return Position3D(x=x, y=y, z=z)

    def positions_from_list(self, field: str, value: Any) -> Tuple[Position3D, ...]:
        if not isinstance(value, list):
            raise ConfigValueError(field, f"expected a list of [x, y, z], got {value!r}")
        return tuple(self.position_from_list(f"{field}[{i}]", v) for i, v in enumerate(value))

    def pairs_from_list(self, field: str, value: Any) -> Tuple[Pairing, ...]:
        if not isinstance(value, list):
            raise ConfigValueError(field, f"expected a list of [user, eve], got {value!r}")
        pairs: List[Pairing] = []
        for i, item in enumerate(value):
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise ConfigValueError(f"{field}[{i}]", f"expected [user, eve], got {item!r}")
            pairs.append((_integer(field, item[0]), _integer(field, item[1])))
        return tuple(pairs)

    def layout_from_dict(self, data: Section) -> Tuple[NodeLayout, Position3D]:
        for key in ("bs", "uav", "reflect_users", "transmit_users", "reflect_eves", "transmit_eves"):
            if key not in data:
                raise ConfigValueError(f"layout.{key}", "required")
        reflect_users = self.positions_from_list("layout.reflect_users", data["reflect_users"])
        transmit_users = self.positions_from_list("layout.transmit_users", data["transmit_users"])
        reflect_eves = self.positions_from_list("layout.reflect_eves", data["reflect_eves"])
        transmit_eves = self.positions_from_list("layout.transmit_eves", data["transmit_eves"])

        reflect_default = [[i, i] for i in range(min(len(reflect_users), len(reflect_eves)))]
        transmit_default = [[i, i] for i in range(min(len(transmit_users), len(transmit_eves)))]
        layout = NodeLayout(
            bs=self.position_from_list("layout.bs", data["bs"]),
            reflect_users=reflect_users,
            transmit_users=transmit_users,
            reflect_eves=reflect_eves,
            transmit_eves=transmit_eves,
            reflect_pairs=self.pairs_from_list("layout.reflect_pairs", data.get("reflect_pairs", reflect_default)),
            transmit_pairs=self.pairs_from_list(
                "layout.transmit_pairs", data.get("transmit_pairs", transmit_default)
            ),
        )
        return layout, self.position_from_list("layout.uav", data["uav"])

    def fading_from_dict(self, data: Section) -> FadingParams:
        m = data.get("m")
        if m is not None:
            m = _number("fading.m", m)
        return FadingParams(
            m_bv=_number("fading.m_bv", data.get("m_bv", m)),
            m_vu_r=_number("fading.m_vu_r", data.get("m_vu_r", m)),
            m_vu_t=_number("fading.m_vu_t", data.get("m_vu_t", m)),
            m_ve_r=_number("fading.m_ve_r", data.get("m_ve_r", m)),
            m_ve_t=_number("fading.m_ve_t", data.get("m_ve_t", m)),
        )

    def power_from_dict(self, data: Section) -> PowerConfig:
        return PowerConfig(
            ps_dbm=_number("power.ps_dbm", data.get("ps_dbm")),
            n0_dbm=_number("power.n0_dbm", data.get("n0_dbm")),
            rho=_number("power.rho", data.get("rho")),
            zeta=_number("power.zeta", data.get("zeta")),
            alpha_pl=_number("power.alpha", data.get("alpha")),
        )

    def mc_from_dict(self, data: Section) -> McSettings:
        return McSettings(
            trials=_integer("monte_carlo.trials", data.get("trials")),
            seed=_integer("monte_carlo.seed", data.get("seed")),
            eve_phase_model=_enum("monte_carlo.eve_model", EvePhaseModel, data.get("eve_model")),
            n_jobs=_integer("monte_carlo.n_jobs", data.get("n_jobs")),
            chunk_size=_integer("monte_carlo.chunk_size", data.get("chunk_size")),
        )

    def scenario_from_dict(self, data: Mapping[str, Section]) -> ScenarioConfig:
        layout, uav = self.layout_from_dict(data.get("layout", {}))
        system = data.get("system", {})
        quadrature = data.get("quadrature", {})
        return ScenarioConfig(
            layout=layout,
            uav=uav,
            fading=self.fading_from_dict(data.get("fading", {})),
            power=self.power_from_dict(data.get("power", {})),
            phase=PhaseErrorModel(kappa=_number("phase.kappa", data.get("phase", {}).get("kappa"))),
            elements=_integer("system.elements", system.get("elements")),
            w1=_number("system.w1", system.get("w1")),
            w2=_number("system.w2", system.get("w2")),
            quad_order=_integer("quadrature.order", quadrature.get("order")),
            quad_method=_enum("quadrature.method", QuadMethod, quadrature.get("method")),
            gamma_fit=_enum("quadrature.gamma_fit", GammaFit, quadrature.get("gamma_fit")),
            mc=self.mc_from_dict(data.get("monte_carlo", {})),
        )

    def search_from_dict(
        self, data: Section, cfg: ScenarioConfig
    ) -> Tuple[SearchBox, OptimizerSettings]:
        """Search box and optimizer settings; the box defaults to the ground-node footprint."""
        nodes = (
            *cfg.layout.reflect_users,
            *cfg.layout.transmit_users,
            *cfg.layout.reflect_eves,
            *cfg.layout.transmit_eves,
        )
        defaults: Dict[str, float] = {
            "x_min": min(n.x for n in nodes),
            "x_max": max(n.x for n in nodes),
            "y_min": min(n.y for n in nodes),
            "y_max": max(n.y for n in nodes),
            "z_min": 1.0,
            "z_max": max(cfg.uav.z, 1.0),
        }
        try:
            box = SearchBox(
                **{key: _number(f"search.{key}", data.get(key, value)) for key, value in defaults.items()},
                step=_number("search.step", data.get("step")),
            )
            settings = OptimizerSettings(
                eps_position=_number("search.eps_position", data.get("eps_position")),
                k_max=_integer("search.k_max", data.get("k_max")),
                eps_zeta=_number("search.eps_zeta", data.get("eps_zeta")),
                n_max_gss=_integer("search.n_max_gss", data.get("n_max_gss")),
                w1=cfg.w1,
                w2=cfg.w2,
                n_jobs=_integer("search.n_jobs", data.get("n_jobs")),
                objective=_enum("search.objective", ObjectiveKind, data.get("objective")),
                optimize_zeta=bool(data.get("optimize_zeta", True)),
            )
        except OptimizationError as exc:
            raise ConfigValueError("search", str(exc)) from exc
        return box, settings

    def scenario_to_dict(self, cfg: ScenarioConfig) -> Dict[str, Dict[str, Any]]:
        layout = cfg.layout
        return {
            "layout": {
                "bs": list(layout.bs.as_tuple()),
                "uav": list(cfg.uav.as_tuple()),
                "reflect_users": [list(p.as_tuple()) for p in layout.reflect_users],
                "transmit_users": [list(p.as_tuple()) for p in layout.transmit_users],
                "reflect_eves": [list(p.as_tuple()) for p in layout.reflect_eves],
                "transmit_eves": [list(p.as_tuple()) for p in layout.transmit_eves],
                "reflect_pairs": [list(p) for p in layout.reflect_pairs],
                "transmit_pairs": [list(p) for p in layout.transmit_pairs],
            },
            "fading": {
                "m_bv": cfg.fading.m_bv,
                "m_vu_r": cfg.fading.m_vu_r,
                "m_vu_t": cfg.fading.m_vu_t,
                "m_ve_r": cfg.fading.m_ve_r,
                "m_ve_t": cfg.fading.m_ve_t,
            },
            "power": {
                "ps_dbm": cfg.power.ps_dbm,
                "n0_dbm": cfg.power.n0_dbm,
                "rho": cfg.power.rho,
                "zeta": cfg.power.zeta,
                "alpha": cfg.power.alpha_pl,
            },
            "phase": {"kappa": cfg.phase.kappa},
            "system": {"elements": cfg.elements, "w1": cfg.w1, "w2": cfg.w2},
            "quadrature": {
                "order": cfg.quad_order,
                "method": cfg.quad_method.value,
                "gamma_fit": cfg.gamma_fit.value,
            },
            "monte_carlo": {
                "trials": cfg.mc.trials,
                "seed": cfg.mc.seed,
                "eve_model": cfg.mc.eve_phase_model.value,
                "n_jobs": cfg.mc.n_jobs,
                "chunk_size": cfg.mc.chunk_size,
            },
        }

    def flatten(self, data: Mapping[str, Mapping[str, Any]], prefix: Optional[str] = None) -> Dict[str, Any]:
        """``{"power": {"rho": 0.3}}`` -> ``{"power.rho": 0.3}``."""
        flat: Dict[str, Any] = {}
        for section, values in data.items():
            name = f"{prefix}.{section}" if prefix else section
            for key, value in values.items():
                flat[f"{name}.{key}"] = value
        return flat
