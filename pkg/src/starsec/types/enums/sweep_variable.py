from enum import Enum


class SweepVariable(Enum):
    PS_DBM = "ps_dbm"
    M = "elements"
    KAPPA = "kappa"
    ZETA = "zeta"
