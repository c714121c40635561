"""Constants for the starsec library."""
import math

VERSION = "0.1.0"

# Channel and power defaults
DEFAULT_ALPHA = 2.0
DEFAULT_N0_DBM = -100.0
DEFAULT_NAKAGAMI_M = 2.0
DEFAULT_ELEMENTS = 20
DEFAULT_KAPPA = 20.0
DEFAULT_RHO = 0.3
DEFAULT_ZETA = 0.2
DEFAULT_W1 = 0.45
DEFAULT_W2 = 0.55

# Numerics
DEFAULT_QUAD_ORDER = 64
MAX_QUAD_ORDER = 200
LAGUERRE_SCALE_LIMIT = 1.0
LAGUERRE_TOLERANCE = 1e-8
ADAPTIVE_UPPER = 50.0
ADAPTIVE_LIMIT = 200
ADAPTIVE_EPSABS = 1e-10
ADAPTIVE_EPSREL = 1e-10
PHI_FLOOR = 1e-12
COLOCATION_EPS = 1e-9
UNIFORM_PHASE_VARIANCE = math.pi**2 / 3.0

# Monte Carlo
DEFAULT_TRIALS = 100_000
DEFAULT_SEED = 2024
DEFAULT_CHUNK_SIZE = 4096

# Optimizer
DEFAULT_GRID_STEP = 1.0
DEFAULT_EPS_POSITION = 1e-3
DEFAULT_K_MAX = 50
DEFAULT_EPS_ZETA = 1e-4
DEFAULT_N_MAX_GSS = 100
GOLDEN_RATIO = (math.sqrt(5.0) - 1.0) / 2.0

# Output
CSV_FLOAT_FORMAT = "%.9g"
VALIDATION_REPORT_NAME = "validation_report.csv"
OPTIMIZE_TRACE_NAME = "optimize_trace.csv"
OPTIMIZE_SUMMARY_NAME = "optimize_summary.json"

# Exit codes
EXIT_OK = 0
EXIT_VALIDATION_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_IO_ERROR = 3


# Messages
class Messages:
    # Config messages
    LOADING_CONFIG = "Loading scenario from %s"
    CONFIG_LOADED = "Scenario loaded: M=%d, kappa=%g, rho=%g, zeta=%g, pairs=%d"
    CONFIG_DEFAULT = "%s not set, using default %r"

    # Numerics messages
    ADAPTIVE_FALLBACK = "MGF scale %.3g exceeds Laguerre limit, integrating adaptively"
    LAGUERRE_UNCONVERGED = "Laguerre sum moved %.3g against the order-%d rule, integrating adaptively"
    ADAPTIVE_WARNING = "Adaptive MGF integration reported: %s"
    PHI_FLOORED = "Eve resultant length %.3g floored at %.0e"

    # Monte Carlo messages
    MC_START = "Simulating %d trials in %d chunks (n_jobs=%d, eve model=%s)"
    MC_DONE = "Simulation done: c_user_r=%.6g, c_user_t=%.6g"

    # Optimizer messages
    GRID_SWEEP = "Grid sweep %d: uav=%s wssr=%.9g"
    GRID_CONVERGED = "Grid search converged after %d sweeps at %s"
    GRID_NOT_CONVERGED = "Grid search stopped at k_max=%d sweeps"
    GSS_DONE = "GSS finished after %d iterations: zeta=%.6f"
    AO_ROUND = "AO round %d: uav=%s zeta=%.6f wssr=%.9g"
    AO_CONVERGED = "AO converged after %d rounds: wssr=%.9g"

    # Experiment messages
    SWEEP_POINT = "Sweep %s=%g"
    WROTE_FILE = "Wrote %s"
    CHECK_RESULT = "Check %s: measured=%.6g tolerance=%.6g passed=%s"
    VALIDATION_SUMMARY = "Validation: %d/%d checks passed"

    # Error messages
    CONFIG_ERROR = "Configuration error: %s"
    IO_ERROR = "I/O error: %s"
    RUN_ERROR = "Run failed: %s"
    VALIDATION_FAILED = "Validation failed: %s"
