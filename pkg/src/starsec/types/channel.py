import math
from typing import Optional

from ..errors import ConfigValueError, DistributionError
from .base import StarSecType
from .enums import GammaFit

MIN_NAKAGAMI_M = 0.5


class PhaseErrorModel(StarSecType):
    """Von Mises phase error with concentration ``kappa``; ``kappa = 0`` is uniform."""

    kappa: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.kappa) or self.kappa < 0:
            raise ConfigValueError("phase.kappa", f"must be finite and >= 0, got {self.kappa!r}")


class FadingParams(StarSecType):
    """Nakagami shape per link, unit spread."""

    m_bv: float
    m_vu_r: float
    m_vu_t: float
    m_ve_r: float
    m_ve_t: float

    def __post_init__(self) -> None:
        for name in ("m_bv", "m_vu_r", "m_vu_t", "m_ve_r", "m_ve_t"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < MIN_NAKAGAMI_M:
                raise ConfigValueError(f"fading.{name}", f"must be >= {MIN_NAKAGAMI_M}, got {value!r}")

    @classmethod
    def uniform(cls, m: float) -> "FadingParams":
        return cls(m_bv=m, m_vu_r=m, m_vu_t=m, m_ve_r=m, m_ve_t=m)


class GammaChannelParams(StarSecType):
    """Equivalent Gamma law of the cascaded channel power X.

    ``shape`` is the Gamma shape m and ``spread`` the mean Omega, so the
    Gamma scale is ``spread / shape``. ``resultant`` holds the eavesdropper's
    wrapped-normal resultant length and is ``None`` for legitimate users.
    """

    shape: float
    spread: float
    elements: int
    alpha2: float
    phi1: float
    phi2: float
    resultant: Optional[float] = None
    fit: GammaFit = GammaFit.COHERENT

    def __post_init__(self) -> None:
        if not (math.isfinite(self.shape) and self.shape > 0):
            raise DistributionError(f"Gamma shape must be positive, got {self.shape!r}")
        if not (math.isfinite(self.spread) and self.spread > 0):
            raise DistributionError(f"Gamma spread must be positive, got {self.spread!r}")
        if not 0.0 <= self.phi1 <= 1.0:
            raise DistributionError(f"phi1 must lie in [0, 1], got {self.phi1!r}")
        if abs(self.phi2) > 1.0:
            raise DistributionError(f"|phi2| must be <= 1, got {self.phi2!r}")
        if self.resultant is not None and not 0.0 <= self.resultant <= 1.0:
            raise DistributionError(f"resultant must lie in [0, 1], got {self.resultant!r}")

    @property
    def scale(self) -> float:
        return self.spread / self.shape

    @property
    def coherence(self) -> float:
        """First trigonometric moment of the phase seen by this receiver."""
        return self.phi1 if self.resultant is None else self.resultant

    @property
    def mu(self) -> float:
        """Mean of the in-phase component U."""
        return self.elements * self.alpha2 * self.coherence

    @property
    def sigma_u2(self) -> float:
        alpha4 = self.alpha2 * self.alpha2
        return 0.5 * self.elements * (1.0 + self.phi2 - 2.0 * alpha4 * self.coherence**2)

    @property
    def sigma_v2(self) -> float:
        return 0.5 * self.elements * (1.0 - self.phi2)
