"""Monte Carlo oracle over the raw cascaded-channel signal model."""
import logging
import math
from typing import Dict, List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed
from numpy.typing import NDArray
from typing_extensions import override

from ..errors import ConfigValueError
from ..types import (
    Estimate,
    EvePhaseModel,
    FadingParams,
    McSettings,
    PhaseErrorModel,
    Position3D,
    RateEstimates,
    ScenarioConfig,
    SnrConstants,
)
from ..types.reports import RATE_FIELDS
from .closed_form import snr_constants
from .constants import Messages
from .geometry import link_distances
from .interfaces import ISecrecyModel
from .rf_stats import eff_phase_variance

logger = logging.getLogger(__name__)

LN2 = math.log(2.0)
Shape = Tuple[int, ...]
FloatArray = NDArray[np.float64]

SAMPLE_BLOCK = 1 << 20


def sample_nakagami(
    m: float, omega: float, rng: np.random.Generator, size: Optional[Shape] = None
) -> FloatArray:
    """Nakagami-m envelope as the square root of a Gamma(m, omega/m) power."""
    return np.sqrt(rng.gamma(m, omega / m, size=size))


def sample_vonmises(kappa: float, rng: np.random.Generator, size: Optional[Shape] = None) -> FloatArray:
    """Zero-mean von Mises phase error; ``kappa = 0`` is uniform."""
    if kappa == 0:
        return rng.uniform(-math.pi, math.pi, size=size)
    return rng.vonmises(0.0, kappa, size=size)


def sample_eve_phase(
    phi: FloatArray, model: PhaseErrorModel, eve_model: EvePhaseModel, rng: np.random.Generator
) -> FloatArray:
    """Effective eavesdropper phase error given the user's von Mises errors ``phi``."""
    if eve_model is EvePhaseModel.EXACT_UNIFORM:
        theta_eq = rng.uniform(0.0, 2.0 * math.pi, size=phi.shape)
        theta_q = rng.uniform(0.0, 2.0 * math.pi, size=phi.shape)
        return theta_eq - theta_q + phi
    variance = eff_phase_variance(model)
    if not math.isfinite(variance):
        return rng.uniform(-math.pi, math.pi, size=phi.shape)
    return rng.normal(0.0, math.sqrt(variance), size=phi.shape)


def _combine(h: FloatArray, g: FloatArray, phase: FloatArray) -> Tuple[FloatArray, FloatArray]:
    amp = h * g
    return np.sum(amp * np.cos(phase), axis=-1), -np.sum(amp * np.sin(phase), axis=-1)


def sample_cascaded_components(
    elements: int,
    m_bv: float,
    m_link: float,
    model: PhaseErrorModel,
    rng: np.random.Generator,
    trials: int,
    eve_model: Optional[EvePhaseModel] = None,
) -> Tuple[FloatArray, FloatArray]:
    """In-phase U and quadrature V of the cascaded channel; an eavesdropper when ``eve_model`` is set.

    Drawn in blocks of about ``SAMPLE_BLOCK`` channel coefficients.
    """
    block = max(1, SAMPLE_BLOCK // elements)
    parts_u: List[FloatArray] = []
    parts_v: List[FloatArray] = []
    for start in range(0, trials, block):
        size = (min(block, trials - start), elements)
        h = sample_nakagami(m_bv, 1.0, rng, size)
        g = sample_nakagami(m_link, 1.0, rng, size)
        phase = sample_vonmises(model.kappa, rng, size)
        if eve_model is not None:
            phase = sample_eve_phase(phase, model, eve_model, rng)
        u, v = _combine(h, g, phase)
        parts_u.append(u)
        parts_v.append(v)
    return np.concatenate(parts_u), np.concatenate(parts_v)


def sample_cascaded_power(
    elements: int,
    m_bv: float,
    m_link: float,
    model: PhaseErrorModel,
    rng: np.random.Generator,
    trials: int,
    eve_model: Optional[EvePhaseModel] = None,
) -> FloatArray:
    """X = U^2 + V^2."""
    u, v = sample_cascaded_components(elements, m_bv, m_link, model, rng, trials, eve_model)
    return u * u + v * v


def _log2_1p(x: FloatArray) -> FloatArray:
    return np.log1p(x) / LN2


def _simulate_chunk(
    trials: int,
    elements: int,
    fading: FadingParams,
    model: PhaseErrorModel,
    k: SnrConstants,
    eve_model: EvePhaseModel,
    rng: np.random.Generator,
) -> FloatArray:
    """Per-trial rates, columns ordered as c_user_r, c_eve_r, c_user_t, c_eve_t."""
    size = (trials, elements)
    h = sample_nakagami(fading.m_bv, 1.0, rng, size)
    out = np.empty((trials, 4), dtype=np.float64)
    for col, m_user, m_eve, k_user, k_eve, k_int_user, k_int_eve in (
        (0, fading.m_vu_r, fading.m_ve_r, k.k1, k.k1p, 0.0, 0.0),
        (2, fading.m_vu_t, fading.m_ve_t, k.k2, k.k2p, k.k1t, k.k1pt),
    ):
        g_user = sample_nakagami(m_user, 1.0, rng, size)
        g_eve = sample_nakagami(m_eve, 1.0, rng, size)
        phi = sample_vonmises(model.kappa, rng, size)
        theta = sample_eve_phase(phi, model, eve_model, rng)

        u, v = _combine(h, g_user, phi)
        x_user = u * u + v * v
        u, v = _combine(h, g_eve, theta)
        x_eve = u * u + v * v

        out[:, col] = _log2_1p(k_user * x_user / (k_int_user * x_user + 1.0))
        out[:, col + 1] = _log2_1p(k_eve * x_eve / (k_int_eve * x_eve + 1.0))
    return out


def _estimate(values: FloatArray) -> Estimate:
    n = values.size
    se = float(np.std(values, ddof=1)) / math.sqrt(n) if n > 1 else 0.0
    return Estimate(mean=float(np.mean(values)), se=se)


def _secrecy(user: FloatArray, eve: FloatArray) -> Tuple[Estimate, Estimate]:
    diff = user - eve
    spread = _estimate(diff)
    ergodic = Estimate(mean=max(float(np.mean(user)) - float(np.mean(eve)), 0.0), se=spread.se)
    return ergodic, _estimate(np.maximum(diff, 0.0))


def chunk_sizes(trials: int, chunk_size: int) -> List[int]:
    full, rest = divmod(trials, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def simulate_rates(
    cfg: ScenarioConfig,
    uav: Position3D,
    zeta: float,
    mc: Optional[McSettings] = None,
    pair: int = 0,
) -> RateEstimates:
    """Empirical ergodic capacities and secrecy rates of one NOMA pair.

    Trials run in fixed-size chunks, each on its own Philox substream of
    ``SeedSequence(seed)``, so results do not depend on ``n_jobs``.
    """
    mc = mc or cfg.mc
    if mc.trials < 1:
        raise ConfigValueError("monte_carlo.trials", f"must be >= 1, got {mc.trials!r}")
    power = cfg.power.replace(zeta=zeta)
    k = snr_constants(power, link_distances(cfg.layout, uav, pair))

    sizes = chunk_sizes(mc.trials, mc.chunk_size)
    streams = np.random.SeedSequence(mc.seed).spawn(len(sizes))
    logger.debug(Messages.MC_START, mc.trials, len(sizes), mc.n_jobs, mc.eve_phase_model.value)

    chunks = Parallel(n_jobs=mc.n_jobs, prefer="threads")(
        delayed(_simulate_chunk)(
            size,
            cfg.elements,
            cfg.fading,
            cfg.phase,
            k,
            mc.eve_phase_model,
            np.random.Generator(np.random.Philox(stream)),
        )
        for size, stream in zip(sizes, streams)
    )
    rates = np.concatenate(chunks, axis=0)

    r_sec_r, r_sec_r_clamped = _secrecy(rates[:, 0], rates[:, 1])
    r_sec_t, r_sec_t_clamped = _secrecy(rates[:, 2], rates[:, 3])
    estimates = RateEstimates(
        c_user_r=_estimate(rates[:, 0]),
        c_eve_r=_estimate(rates[:, 1]),
        c_user_t=_estimate(rates[:, 2]),
        c_eve_t=_estimate(rates[:, 3]),
        r_sec_r=r_sec_r,
        r_sec_t=r_sec_t,
        r_sec_r_clamped=r_sec_r_clamped,
        r_sec_t_clamped=r_sec_t_clamped,
        trials=mc.trials,
    )
    logger.debug(Messages.MC_DONE, estimates.c_user_r.mean, estimates.c_user_t.mean)
    return estimates


def simulate_all_pairs(
    cfg: ScenarioConfig, uav: Position3D, zeta: float, mc: Optional[McSettings] = None
) -> List[RateEstimates]:
    return [simulate_rates(cfg, uav, zeta, mc, pair) for pair in range(cfg.layout.pair_count)]


def average_estimates(estimates: List[RateEstimates], name: str) -> Estimate:
    """Pair average of one metric; pairs are simulated independently."""
    n = len(estimates)
    items = [e.metric(name) for e in estimates]
    mean = math.fsum(e.mean for e in items) / n
    se = math.sqrt(math.fsum(e.se * e.se for e in items)) / n
    return Estimate(mean=mean, se=se)


class MonteCarloModel(ISecrecyModel):
    """WSSR objective backed by simulation; meant for validation runs."""

    def __init__(self, mc: Optional[McSettings] = None) -> None:
        self._mc = mc

    @override
    def wssr(self, cfg: ScenarioConfig, uav: Position3D, zeta: float) -> float:
        estimates = simulate_all_pairs(cfg, uav, zeta, self._mc)
        return math.fsum(e.wssr(cfg.w1, cfg.w2) for e in estimates) / len(estimates)

    @override
    def metrics(self, cfg: ScenarioConfig, uav: Position3D, zeta: float) -> Dict[str, float]:
        estimates = simulate_all_pairs(cfg, uav, zeta, self._mc)
        return {name: average_estimates(estimates, name).mean for name in RATE_FIELDS}
