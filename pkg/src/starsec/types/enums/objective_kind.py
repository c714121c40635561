from enum import Enum


class ObjectiveKind(Enum):
    CLOSED_FORM = "closed_form"
    MONTE_CARLO = "monte_carlo"
