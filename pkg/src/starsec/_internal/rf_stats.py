"""Phase-error moments, Nakagami moments and the equivalent Gamma law of cascaded channel power."""
import logging
import math
from typing import Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import special, stats

from ..errors import DistributionError
from ..types import GammaChannelParams, GammaFit, PhaseErrorModel
from ..types.channel import MIN_NAKAGAMI_M
from .constants import PHI_FLOOR, UNIFORM_PHASE_VARIANCE, Messages

logger = logging.getLogger(__name__)


def vonmises_trig_moment(p: int, kappa: float) -> float:
    """I_p(kappa) / I_0(kappa), the p-th trigonometric moment of a zero-mean von Mises error."""
    if p < 0:
        raise DistributionError(f"moment order must be >= 0, got {p!r}")
    if not (math.isfinite(kappa) and kappa >= 0):
        raise DistributionError(f"kappa must be finite and >= 0, got {kappa!r}")
    if p == 0:
        return 1.0
    if kappa == 0:
        return 0.0
    # exponentially scaled Bessel functions share the exp(-kappa) factor
    return float(special.ive(p, kappa) / special.ive(0, kappa))


def nakagami_abs_mean(m: float) -> float:
    """E|h| for a unit-spread Nakagami-m envelope."""
    if not (math.isfinite(m) and m >= MIN_NAKAGAMI_M):
        raise DistributionError(f"Nakagami m must be >= {MIN_NAKAGAMI_M}, got {m!r}")
    return math.exp(special.gammaln(m + 0.5) - special.gammaln(m)) / math.sqrt(m)


def eff_phase_variance(model: PhaseErrorModel) -> float:
    """Variance of the eavesdropper's effective phase error.

    Two independent uniform channel phases plus the von Mises error, the
    latter matched through its circular variance ``-2 ln phi_1``.
    Infinite for ``kappa = 0``.
    """
    phi1 = vonmises_trig_moment(1, model.kappa)
    if phi1 <= 0.0:
        return math.inf
    return 2.0 * UNIFORM_PHASE_VARIANCE - 2.0 * math.log(phi1)


def eve_resultant(model: PhaseErrorModel) -> float:
    """Wrapped-normal resultant length exp(-Var/2), floored to stay positive."""
    variance = eff_phase_variance(model)
    resultant = math.exp(-0.5 * variance) if math.isfinite(variance) else 0.0
    if resultant < PHI_FLOOR:
        logger.debug(Messages.PHI_FLOORED, resultant, PHI_FLOOR)
        return PHI_FLOOR
    return resultant


def component_moments(
    elements: int, alpha2: float, coherence: float, phi2: float
) -> Tuple[float, float, float]:
    """(mu, sigma_U^2, sigma_V^2) of the in-phase and quadrature sums over ``elements``."""
    alpha4 = alpha2 * alpha2
    mu = elements * alpha2 * coherence
    sigma_u2 = 0.5 * elements * (1.0 + phi2 - 2.0 * alpha4 * coherence**2)
    sigma_v2 = 0.5 * elements * (1.0 - phi2)
    return mu, sigma_u2, sigma_v2


def fit_gamma_params(
    elements: int,
    alpha2: float,
    coherence: float,
    phi1: float,
    phi2: float,
    fit: GammaFit,
    resultant: Optional[float] = None,
) -> GammaChannelParams:
    """Equivalent Gamma law from the component moments at phase coherence ``coherence``."""
    if elements < 1:
        raise DistributionError(f"element count must be >= 1, got {elements!r}")
    mu, sigma_u2, sigma_v2 = component_moments(elements, alpha2, coherence, phi2)
    if sigma_u2 <= 0:
        raise DistributionError(f"in-phase variance must be positive, got {sigma_u2!r}")

    if fit is GammaFit.COHERENT:
        shape = mu * mu / (4.0 * sigma_u2)
        spread = mu * mu
    else:
        # single Gamma matching the first two moments of U^2 + V^2
        mean = mu * mu + sigma_u2 + sigma_v2
        variance = 4.0 * mu * mu * sigma_u2 + 2.0 * sigma_u2**2 + 2.0 * sigma_v2**2
        shape = mean * mean / variance
        spread = mean

    return GammaChannelParams(
        shape=shape,
        spread=spread,
        elements=elements,
        alpha2=alpha2,
        phi1=phi1,
        phi2=phi2,
        resultant=resultant,
        fit=fit,
    )


def user_gamma_params(
    elements: int,
    m_bv: float,
    m_vu: float,
    model: PhaseErrorModel,
    fit: GammaFit = GammaFit.COHERENT,
) -> GammaChannelParams:
    """Equivalent Gamma law of a legitimate user's cascaded channel power."""
    alpha2 = nakagami_abs_mean(m_bv) * nakagami_abs_mean(m_vu)
    phi1 = vonmises_trig_moment(1, model.kappa)
    phi2 = vonmises_trig_moment(2, model.kappa)
    if phi1 == 0.0:
        # fully incoherent: keep the law positive, as for an eavesdropper
        return fit_gamma_params(elements, alpha2, PHI_FLOOR, phi1, phi2, fit, resultant=PHI_FLOOR)
    return fit_gamma_params(elements, alpha2, phi1, phi1, phi2, fit)


def eve_gamma_params(
    elements: int,
    m_bv: float,
    m_ve: float,
    model: PhaseErrorModel,
    fit: GammaFit = GammaFit.COHERENT,
) -> GammaChannelParams:
    """Equivalent Gamma law of an eavesdropper, coherence taken from the wrapped-normal resultant.

    ``COHERENT`` keeps the von Mises ``phi_2`` in the component variances.
    ``MOMENT`` matches the moments of the wrapped-normal phase itself, whose
    second trigonometric moment is ``resultant ** 4``; with nearly uniform
    phase that leaves U and V with equal variance, as in simulation.
    """
    alpha2 = nakagami_abs_mean(m_bv) * nakagami_abs_mean(m_ve)
    phi1 = vonmises_trig_moment(1, model.kappa)
    resultant = eve_resultant(model)
    if fit is GammaFit.MOMENT:
        phi2 = resultant**4
    else:
        phi2 = vonmises_trig_moment(2, model.kappa)
    return fit_gamma_params(elements, alpha2, resultant, phi1, phi2, fit, resultant=resultant)


def gamma_cdf(params: GammaChannelParams, x: ArrayLike) -> NDArray[np.float64]:
    return np.asarray(stats.gamma.cdf(x, a=params.shape, scale=params.scale), dtype=np.float64)
