"""Analytic ergodic capacities, secrecy rates and WSSR."""
import functools
import logging
from typing import Dict, NamedTuple

from typing_extensions import override

from ..types import (
    FadingParams,
    GammaChannelParams,
    GammaFit,
    LinkDistances,
    PhaseErrorModel,
    Position3D,
    PowerConfig,
    QuadMethod,
    QuadRule,
    ScenarioConfig,
    SecrecyReport,
    SnrConstants,
)
from ..types.reports import REPORT_FIELDS
from .geometry import link_distances
from .interfaces import ISecrecyModel
from .quadrature import laguerre_rule, mgf_capacity
from .rf_stats import eve_gamma_params, user_gamma_params

logger = logging.getLogger(__name__)


class ChannelSet(NamedTuple):
    user_r: GammaChannelParams
    eve_r: GammaChannelParams
    user_t: GammaChannelParams
    eve_t: GammaChannelParams


@functools.lru_cache(maxsize=256)
def _channel_set(elements: int, fading: FadingParams, phase: PhaseErrorModel, fit: GammaFit) -> ChannelSet:
    return ChannelSet(
        user_r=user_gamma_params(elements, fading.m_bv, fading.m_vu_r, phase, fit),
        eve_r=eve_gamma_params(elements, fading.m_bv, fading.m_ve_r, phase, fit),
        user_t=user_gamma_params(elements, fading.m_bv, fading.m_vu_t, phase, fit),
        eve_t=eve_gamma_params(elements, fading.m_bv, fading.m_ve_t, phase, fit),
    )


def channel_set(cfg: ScenarioConfig) -> ChannelSet:
    """Gamma laws of the four receivers; they do not depend on geometry."""
    return _channel_set(cfg.elements, cfg.fading, cfg.phase, cfg.gamma_fit)


def snr_constants(power: PowerConfig, dists: LinkDistances) -> SnrConstants:
    snr = power.snr_linear
    a = power.alpha_pl
    bv = dists.d_bv**a
    reflect = power.rho * power.zeta * snr / bv
    transmit = (1.0 - power.rho) * (1.0 - power.zeta) * snr / bv
    return SnrConstants(
        k1=reflect / dists.d_vu_r**a,
        k2=transmit / dists.d_vu_t**a,
        k1p=reflect / dists.d_ve_r**a,
        k2p=transmit / dists.d_ve_t**a,
        k1t=reflect / dists.d_vu_t**a,
        k1pt=reflect / dists.d_ve_t**a,
    )


def capacity_reflect(
    params: GammaChannelParams,
    k_sig: float,
    rule: QuadRule,
    method: QuadMethod = QuadMethod.LAGUERRE,
) -> float:
    """Ergodic capacity of an interference-free reflect-side receiver."""
    return mgf_capacity(params, k_sig, 0.0, rule, method)


def capacity_transmit(
    params: GammaChannelParams,
    k_sig: float,
    k_int: float,
    rule: QuadRule,
    method: QuadMethod = QuadMethod.LAGUERRE,
) -> float:
    """Ergodic capacity of a transmit-side receiver that treats the reflect signal as interference."""
    return mgf_capacity(params, k_sig, k_int, rule, method)


def secrecy_report(cfg: ScenarioConfig, uav: Position3D, zeta: float, pair: int = 0) -> SecrecyReport:
    """Capacities, clamped secrecy rates and WSSR of one NOMA pair."""
    power = cfg.power.replace(zeta=zeta)
    k = snr_constants(power, link_distances(cfg.layout, uav, pair))
    channels = channel_set(cfg)
    rule = laguerre_rule(cfg.quad_order)
    method = cfg.quad_method
    return SecrecyReport.from_capacities(
        c_user_r=capacity_reflect(channels.user_r, k.k1, rule, method),
        c_eve_r=capacity_reflect(channels.eve_r, k.k1p, rule, method),
        c_user_t=capacity_transmit(channels.user_t, k.k2, k.k1t, rule, method),
        c_eve_t=capacity_transmit(channels.eve_t, k.k2p, k.k1pt, rule, method),
        w1=cfg.w1,
        w2=cfg.w2,
    )


def mean_report(cfg: ScenarioConfig, uav: Position3D, zeta: float) -> SecrecyReport:
    """Report averaged over every configured NOMA pair."""
    return SecrecyReport.average(
        secrecy_report(cfg, uav, zeta, pair) for pair in range(cfg.layout.pair_count)
    )


class ClosedFormModel(ISecrecyModel):
    """WSSR objective backed by the analytic engine."""

    @override
    def wssr(self, cfg: ScenarioConfig, uav: Position3D, zeta: float) -> float:
        return mean_report(cfg, uav, zeta).wssr

    @override
    def metrics(self, cfg: ScenarioConfig, uav: Position3D, zeta: float) -> Dict[str, float]:
        report = mean_report(cfg, uav, zeta)
        return {name: report.metric(name) for name in REPORT_FIELDS}
