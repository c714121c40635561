from enum import Enum


class GammaFit(Enum):
    """Equivalent-Gamma fit of the cascaded channel power.

    ``COHERENT`` keeps only the coherent term: spread mu^2, shape mu^2 / (4 sigma_U^2).
    ``MOMENT`` matches the mean and variance of U^2 + V^2.
    """

    COHERENT = "coherent"
    MOMENT = "moment"
