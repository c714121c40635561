from abc import ABC, abstractmethod
from typing import Any, Dict, Mapping

from ..types import Position3D, ScenarioConfig


class ISecrecyModel(ABC):
    """Interface for WSSR objective backends."""

    @abstractmethod
    def wssr(self, cfg: ScenarioConfig, uav: Position3D, zeta: float) -> float:
        """Pair-averaged weighted sum secrecy rate."""
        pass

    @abstractmethod
    def metrics(self, cfg: ScenarioConfig, uav: Position3D, zeta: float) -> Dict[str, float]:
        """Pair-averaged metrics keyed by report field name."""
        pass


class IConfigSource(ABC):
    """Interface for scenario sources."""

    @abstractmethod
    def load(self) -> ScenarioConfig:
        """Load and validate the scenario."""
        pass

    @abstractmethod
    def raw(self) -> Mapping[str, Any]:
        """Merged raw sections, defaults applied."""
        pass
