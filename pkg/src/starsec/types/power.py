import math

from ..errors import ConfigValueError, NumericalError
from .base import StarSecType


class PowerConfig(StarSecType):
    """BS power budget, NOMA split ``rho``, STAR-RIS reflect share ``zeta``, path-loss exponent."""

    ps_dbm: float
    n0_dbm: float
    rho: float
    zeta: float
    alpha_pl: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.ps_dbm):
            raise ConfigValueError("power.ps_dbm", f"must be finite, got {self.ps_dbm!r}")
        if not math.isfinite(self.n0_dbm):
            raise ConfigValueError("power.n0_dbm", f"must be finite, got {self.n0_dbm!r}")
        if not 0.0 <= self.rho <= 1.0:
            raise ConfigValueError("power.rho", f"must lie in [0, 1], got {self.rho!r}")
        if not 0.0 <= self.zeta <= 1.0:
            raise ConfigValueError("power.zeta", f"must lie in [0, 1], got {self.zeta!r}")
        if not (math.isfinite(self.alpha_pl) and self.alpha_pl > 0):
            raise ConfigValueError("power.alpha", f"must be positive, got {self.alpha_pl!r}")

    @property
    def snr_linear(self) -> float:
        """P_s / N0 as a linear ratio."""
        return dbm_to_mw(self.ps_dbm) / dbm_to_mw(self.n0_dbm)


class SnrConstants(StarSecType):
    """Deterministic SNR scale factors.

    ``k1``/``k2`` serve the users and ``k1p``/``k2p`` the eavesdroppers.
    ``k1t`` and ``k1pt`` are the NOMA interference constants seen on the
    transmit-side user and eavesdropper links.
    """

    k1: float
    k2: float
    k1p: float
    k2p: float
    k1t: float
    k1pt: float

    def __post_init__(self) -> None:
        for name in ("k1", "k2", "k1p", "k2p", "k1t", "k1pt"):
            value = getattr(self, name)
            if not value >= 0:
                raise NumericalError(f"SNR constant {name} must be >= 0, got {value!r}")


def dbm_to_mw(p_dbm: float) -> float:
    return float(10.0 ** (p_dbm / 10.0))
