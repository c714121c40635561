from ._internal.closed_form import (
    ClosedFormModel,
    capacity_reflect,
    capacity_transmit,
    mean_report,
    secrecy_report,
    snr_constants,
)
from ._internal.config_loader import load_config
from ._internal.constants import VERSION
from ._internal.geometry import distance, link_distances
from ._internal.monte_carlo import (
    MonteCarloModel,
    sample_nakagami,
    sample_vonmises,
    simulate_rates,
)
from ._internal.optimizer import alternating_optimize, grid_search_uav, gss_zeta
from ._internal.quadrature import laguerre_rule, mgf_capacity
from ._internal.rf_stats import (
    eff_phase_variance,
    eve_gamma_params,
    nakagami_abs_mean,
    user_gamma_params,
    vonmises_trig_moment,
)
from .client import SecrecyClient
from .errors import ConfigError, StarSecError
from .types import (
    GammaChannelParams,
    NodeLayout,
    Position3D,
    ScenarioConfig,
    SecrecyReport,
)

__version__ = VERSION

__all__ = (
    "SecrecyClient",
    "load_config",
    "distance",
    "link_distances",
    "vonmises_trig_moment",
    "nakagami_abs_mean",
    "eff_phase_variance",
    "user_gamma_params",
    "eve_gamma_params",
    "laguerre_rule",
    "mgf_capacity",
    "snr_constants",
    "capacity_reflect",
    "capacity_transmit",
    "secrecy_report",
    "mean_report",
    "ClosedFormModel",
    "sample_nakagami",
    "sample_vonmises",
    "simulate_rates",
    "MonteCarloModel",
    "grid_search_uav",
    "gss_zeta",
    "alternating_optimize",
    "Position3D",
    "NodeLayout",
    "GammaChannelParams",
    "ScenarioConfig",
    "SecrecyReport",
    "StarSecError",
    "ConfigError",
)
