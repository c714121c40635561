from enum import Enum


class QuadMethod(Enum):
    LAGUERRE = "laguerre"
    ADAPTIVE = "adaptive"
    AUTO = "auto"
