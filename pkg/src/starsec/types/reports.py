import math
from typing import Iterable, Tuple

from ..errors import NumericalError
from .base import StarSecType
from .enums import Region

REPORT_FIELDS: Tuple[str, ...] = (
    "c_user_r",
    "c_eve_r",
    "c_user_t",
    "c_eve_t",
    "r_sec_r",
    "r_sec_t",
    "r_sec_sum",
    "wssr",
)


class SecrecyReport(StarSecType):
    """Analytic capacities and secrecy rates of one NOMA pair, in bits/s/Hz."""

    c_user_r: float
    c_eve_r: float
    c_user_t: float
    c_eve_t: float
    r_sec_r: float
    r_sec_t: float
    r_sec_sum: float
    wssr: float

    def __post_init__(self) -> None:
        for name in REPORT_FIELDS:
            value = getattr(self, name)
            if not math.isfinite(value):
                raise NumericalError(f"{name} is not finite: {value!r}")

    @classmethod
    def from_capacities(
        cls,
        *,
        c_user_r: float,
        c_eve_r: float,
        c_user_t: float,
        c_eve_t: float,
        w1: float,
        w2: float,
    ) -> "SecrecyReport":
        """Clamp each region's secrecy rate at zero, then weight (w1 transmit, w2 reflect)."""
        r_sec_r = max(c_user_r - c_eve_r, 0.0)
        r_sec_t = max(c_user_t - c_eve_t, 0.0)
        return cls(
            c_user_r=c_user_r,
            c_eve_r=c_eve_r,
            c_user_t=c_user_t,
            c_eve_t=c_eve_t,
            r_sec_r=r_sec_r,
            r_sec_t=r_sec_t,
            r_sec_sum=r_sec_r + r_sec_t,
            wssr=w1 * r_sec_t + w2 * r_sec_r,
        )

    @classmethod
    def average(cls, reports: Iterable["SecrecyReport"]) -> "SecrecyReport":
        items = list(reports)
        if not items:
            raise NumericalError("cannot average an empty report list")
        values = {
            name: math.fsum(getattr(r, name) for r in items) / len(items)
            for name in REPORT_FIELDS
        }
        return cls(**values)

    def metric(self, name: str) -> float:
        if name not in REPORT_FIELDS:
            raise KeyError(name)
        return float(getattr(self, name))

    def secrecy(self, region: Region) -> float:
        return self.r_sec_r if region is Region.REFLECT else self.r_sec_t


class Estimate(StarSecType):
    """Sample mean with its standard error."""

    mean: float
    se: float

    def __post_init__(self) -> None:
        if not self.se >= 0:
            raise NumericalError(f"standard error must be >= 0, got {self.se!r}")


RATE_FIELDS: Tuple[str, ...] = (
    "c_user_r",
    "c_eve_r",
    "c_user_t",
    "c_eve_t",
    "r_sec_r",
    "r_sec_t",
)


class RateEstimates(StarSecType):
    """Monte Carlo estimates of the ergodic rates of one NOMA pair.

    ``r_sec_*`` follow the ergodic definition ``[E R_user - E R_eve]^+``;
    the ``*_clamped`` fields are the per-trial alternative ``E[(R_user - R_eve)^+]``.
    """

    c_user_r: Estimate
    c_eve_r: Estimate
    c_user_t: Estimate
    c_eve_t: Estimate
    r_sec_r: Estimate
    r_sec_t: Estimate
    r_sec_r_clamped: Estimate
    r_sec_t_clamped: Estimate
    trials: int

    def metric(self, name: str) -> Estimate:
        if name not in (*RATE_FIELDS, "r_sec_r_clamped", "r_sec_t_clamped"):
            raise KeyError(name)
        value: Estimate = getattr(self, name)
        return value

    def wssr(self, w1: float, w2: float) -> float:
        return w1 * self.r_sec_t.mean + w2 * self.r_sec_r.mean


class CheckResult(StarSecType):
    """One row of the validation report."""

    check: str
    measured: float
    tolerance: float
    passed: bool
