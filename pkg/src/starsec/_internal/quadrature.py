"""Gauss-Laguerre rules and the MGF form of the ergodic capacity."""
import functools
import logging
import math
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import integrate, special

from ..errors import QuadratureError
from ..types import GammaChannelParams, QuadMethod, QuadRule
from .constants import (
    ADAPTIVE_EPSABS,
    ADAPTIVE_EPSREL,
    ADAPTIVE_LIMIT,
    ADAPTIVE_UPPER,
    LAGUERRE_SCALE_LIMIT,
    LAGUERRE_TOLERANCE,
    MAX_QUAD_ORDER,
    Messages,
)

logger = logging.getLogger(__name__)

LN2 = math.log(2.0)


@functools.lru_cache(maxsize=32)
def laguerre_rule(order: int) -> QuadRule:
    """Gauss-Laguerre rule of the given order (Golub-Welsch, via scipy)."""
    if not 1 <= order <= MAX_QUAD_ORDER:
        raise QuadratureError(f"quadrature order must lie in [1, {MAX_QUAD_ORDER}], got {order!r}")
    nodes, weights = special.roots_laguerre(order)
    return QuadRule(nodes=nodes, weights=weights)


def mgf(params: GammaChannelParams, beta: float, z: ArrayLike) -> NDArray[np.float64]:
    """E[exp(-beta z X)] = (1 + beta z Omega / m)^(-m), evaluated in the log domain."""
    arg = beta * params.spread / params.shape * np.asarray(z, dtype=np.float64)
    return np.asarray(np.exp(-params.shape * np.log1p(arg)), dtype=np.float64)


def mgf_scale(params: GammaChannelParams, k_sig: float, k_int: float) -> float:
    return (k_int + k_sig) * params.spread / params.shape


def _laguerre_sum(params: GammaChannelParams, k_sig: float, k_int: float, rule: QuadRule) -> float:
    z = rule.nodes
    terms = rule.weights / z * (mgf(params, k_int, z) - mgf(params, k_int + k_sig, z))
    return math.fsum(terms.tolist()) / LN2


def companion_order(order: int) -> int:
    return 2 * order if 2 * order <= MAX_QUAD_ORDER else max(order // 2, 1)


def laguerre_estimate(
    params: GammaChannelParams, k_sig: float, k_int: float, rule: QuadRule
) -> Tuple[float, float]:
    """Laguerre sum with ``rule`` and its distance to the companion-order sum."""
    value = _laguerre_sum(params, k_sig, k_int, rule)
    check = _laguerre_sum(params, k_sig, k_int, laguerre_rule(companion_order(rule.order)))
    return value, abs(value - check)


def mgf_capacity_adaptive(
    params: GammaChannelParams,
    k_sig: float,
    k_int: float,
    upper: float = ADAPTIVE_UPPER,
) -> float:
    """Adaptive integration of the MGF capacity integrand over ``(0, upper]``.

    Integrates in ``s = ln z`` so the MGF knee at ``z ~ m / (beta Omega)``
    is resolved however large the SNR.
    """
    if k_sig <= 0.0:
        return 0.0
    b = k_int + k_sig
    s_hi = math.log(upper)
    s_lo = math.log(1e-14) - math.log(max(b * params.spread, 1.0))

    m = params.shape
    omega_m = params.spread / m

    def integrand(s: float) -> float:
        z = math.exp(s)
        near = math.exp(-m * math.log1p(k_int * omega_m * z))
        far = math.exp(-m * math.log1p(b * omega_m * z))
        return (near - far) * math.exp(-z)

    knees = [math.log(params.shape / (beta * params.spread)) for beta in (k_int, b) if beta > 0]
    points = sorted(s for s in knees if s_lo < s < s_hi) or None
    result = integrate.quad(
        integrand,
        s_lo,
        s_hi,
        points=points,
        limit=ADAPTIVE_LIMIT,
        epsabs=ADAPTIVE_EPSABS,
        epsrel=ADAPTIVE_EPSREL,
        full_output=1,
    )
    value = float(result[0])
    if len(result) > 3:
        logger.warning(Messages.ADAPTIVE_WARNING, result[3])
    if not math.isfinite(value):
        raise QuadratureError(f"adaptive MGF integral is not finite: {value!r}")
    return max(value / LN2, 0.0)


def mgf_capacity(
    params: GammaChannelParams,
    k_sig: float,
    k_int: float,
    rule: QuadRule,
    method: QuadMethod = QuadMethod.LAGUERRE,
) -> float:
    """E[log2(1 + k_sig X / (k_int X + 1))] in bits/s/Hz.

    ``LAGUERRE`` evaluates the Gauss-Laguerre sum with ``rule``; ``ADAPTIVE``
    integrates directly. ``AUTO`` keeps the rule only when the MGF scale is
    within ``LAGUERRE_SCALE_LIMIT`` and the sum agrees with the companion-order
    sum to ``LAGUERRE_TOLERANCE``; otherwise it integrates adaptively.
    """
    if k_sig < 0 or k_int < 0:
        raise QuadratureError(f"SNR constants must be >= 0, got k_sig={k_sig!r}, k_int={k_int!r}")
    if k_sig == 0.0:
        return 0.0
    if method is QuadMethod.ADAPTIVE:
        return mgf_capacity_adaptive(params, k_sig, k_int)
    if method is QuadMethod.AUTO:
        scale = mgf_scale(params, k_sig, k_int)
        if scale > LAGUERRE_SCALE_LIMIT:
            logger.debug(Messages.ADAPTIVE_FALLBACK, scale)
            return mgf_capacity_adaptive(params, k_sig, k_int)
        value, error = laguerre_estimate(params, k_sig, k_int, rule)
        if not error <= LAGUERRE_TOLERANCE:
            logger.debug(Messages.LAGUERRE_UNCONVERGED, error, companion_order(rule.order))
            return mgf_capacity_adaptive(params, k_sig, k_int)
    else:
        value = _laguerre_sum(params, k_sig, k_int, rule)
    if not math.isfinite(value):
        raise QuadratureError(f"Laguerre MGF sum is not finite: {value!r}")
    return max(value, 0.0)


def log_moment(
    params: GammaChannelParams,
    beta: float,
    rule: QuadRule,
    method: QuadMethod = QuadMethod.AUTO,
) -> float:
    """E[log2(1 + beta X)]."""
    return mgf_capacity(params, beta, 0.0, rule, method)
