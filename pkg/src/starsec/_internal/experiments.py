"""Sweeps, optimizer runs and the validation suite, written out as CSV."""
import logging
import math
import tempfile
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy import special, stats

from ..types import (
    CheckResult,
    Estimate,
    EvePhaseModel,
    GammaChannelParams,
    OptimizerSettings,
    OptResult,
    PhaseErrorModel,
    Position3D,
    RateEstimates,
    Region,
    ScenarioConfig,
    SearchBox,
    SweepSeries,
    SweepSpec,
    SweepVariable,
)
from ..types.reports import RATE_FIELDS
from .closed_form import ClosedFormModel, mean_report, secrecy_report
from .constants import (
    LAGUERRE_TOLERANCE,
    OPTIMIZE_SUMMARY_NAME,
    OPTIMIZE_TRACE_NAME,
    VALIDATION_REPORT_NAME,
    Messages,
)
from .csv_writer import config_metadata, write_json, write_table
from .monte_carlo import average_estimates, sample_cascaded_components, simulate_all_pairs, simulate_rates
from .optimizer import alternating_optimize, exhaustive_grid_search, grid_search_uav, gss_zeta
from .quadrature import LN2, laguerre_estimate, laguerre_rule, mgf_capacity
from .rf_stats import gamma_cdf, user_gamma_params

logger = logging.getLogger(__name__)

POWER_GRID = tuple(float(p) for p in range(0, 55, 5))
ELEMENT_GRID = tuple(float(m) for m in range(10, 110, 10))
ZETA_GRID = tuple(round(0.05 * i, 10) for i in range(21))

PRESETS: Dict[str, Tuple[SweepSpec, Optional[SweepSeries]]] = {
    "transmit_vs_power": (
        SweepSpec(variable=SweepVariable.PS_DBM, values=POWER_GRID, outputs=("r_sec_t",)),
        SweepSeries(name="kappa", values=(10.0, 15.0, 20.0)),
    ),
    "reflect_vs_power": (
        SweepSpec(variable=SweepVariable.PS_DBM, values=POWER_GRID, outputs=("r_sec_r",)),
        SweepSeries(name="kappa", values=(10.0, 15.0, 20.0)),
    ),
    "transmit_vs_elements": (
        SweepSpec(variable=SweepVariable.M, values=ELEMENT_GRID, outputs=("r_sec_t",)),
        SweepSeries(name="ps_dbm", values=(10.0, 15.0)),
    ),
    "reflect_vs_elements": (
        SweepSpec(variable=SweepVariable.M, values=ELEMENT_GRID, outputs=("r_sec_r",)),
        SweepSeries(name="ps_dbm", values=(10.0, 15.0)),
    ),
    "wssr_vs_zeta": (
        SweepSpec(variable=SweepVariable.ZETA, values=ZETA_GRID, outputs=("wssr",)),
        None,
    ),
    "wssr_vs_power": (
        SweepSpec(variable=SweepVariable.PS_DBM, values=POWER_GRID, outputs=("wssr",)),
        SweepSeries(name="w1", values=(0.45, 0.5)),
    ),
    "wssr_vs_elements": (
        SweepSpec(variable=SweepVariable.M, values=ELEMENT_GRID, outputs=("wssr",)),
        SweepSeries(name="w1", values=(0.45, 0.5)),
    ),
}


def mc_metric(estimates: List[RateEstimates], name: str, w1: float, w2: float) -> Estimate:
    """Pair-averaged MC estimate of any report metric; pairs and regions treated as independent."""
    if name in RATE_FIELDS:
        return average_estimates(estimates, name)
    r = average_estimates(estimates, "r_sec_r")
    t = average_estimates(estimates, "r_sec_t")
    if name == "wssr":
        return Estimate(mean=w1 * t.mean + w2 * r.mean, se=math.hypot(w1 * t.se, w2 * r.se))
    return Estimate(mean=t.mean + r.mean, se=math.hypot(t.se, r.se))


def sweep_frame(cfg: ScenarioConfig, spec: SweepSpec, with_mc: bool = False) -> pd.DataFrame:
    """Swept variable, analytic metrics, then optional MC mean/SE columns."""
    rows = []
    for value in spec.values:
        logger.debug(Messages.SWEEP_POINT, spec.variable.value, value)
        point = cfg.with_variable(spec.variable, value)
        report = mean_report(point, point.uav, point.power.zeta)
        row: Dict[str, float] = {spec.variable.value: value}
        row.update({name: report.metric(name) for name in spec.outputs})
        if with_mc:
            estimates = simulate_all_pairs(point, point.uav, point.power.zeta)
            for name in spec.outputs:
                estimate = mc_metric(estimates, name, point.w1, point.w2)
                row[f"mc_{name}_mean"] = estimate.mean
                row[f"mc_{name}_se"] = estimate.se
        rows.append(row)
    return pd.DataFrame(rows)


def run_sweep(
    cfg: ScenarioConfig,
    spec: SweepSpec,
    with_mc: bool,
    out_dir: Path,
    suffix: str = "",
) -> Path:
    frame = sweep_frame(cfg, spec, with_mc)
    path = out_dir / f"sweep_{spec.variable.value}{suffix}.csv"
    metadata = config_metadata(
        cfg,
        **{"sweep.variable": spec.variable.value, "sweep.with_mc": with_mc},
    )
    return write_table(frame, path, metadata)


def run_series(
    cfg: ScenarioConfig,
    spec: SweepSpec,
    series: Optional[SweepSeries],
    with_mc: bool,
    out_dir: Path,
) -> List[Path]:
    """One sweep CSV per series value, or a single CSV without a series."""
    if series is None:
        return [run_sweep(cfg, spec, with_mc, out_dir)]
    return [
        run_sweep(series.apply(cfg, value), spec, with_mc, out_dir, suffix=f"_{series.name}{value:g}")
        for value in series.values
    ]


def run_optimize(
    cfg: ScenarioConfig,
    box: SearchBox,
    settings: OptimizerSettings,
    out_dir: Path,
) -> Tuple[OptResult, Path, Path]:
    """Alternating optimization, its WSSR trace as CSV and a JSON summary."""
    result = alternating_optimize(cfg, box, settings)
    trace = pd.DataFrame(result.trace, columns=["iteration", "wssr"])
    metadata = config_metadata(cfg, **{"search.objective": settings.objective.value})
    trace_path = write_table(trace, out_dir / OPTIMIZE_TRACE_NAME, metadata)
    summary = {
        "uav_star": list(result.uav_star.as_tuple()),
        "zeta_star": result.zeta_star,
        "wssr_star": result.wssr_star,
        "iterations": result.iterations,
        "w1": settings.w1,
        "w2": settings.w2,
    }
    summary_path = write_json(summary, out_dir / OPTIMIZE_SUMMARY_NAME)
    return result, trace_path, summary_path


def _check(name: str, measured: float, tolerance: float, passed: Optional[bool] = None) -> CheckResult:
    ok = bool(measured <= tolerance) if passed is None else passed
    logger.info(Messages.CHECK_RESULT, name, measured, tolerance, ok)
    return CheckResult(check=name, measured=float(measured), tolerance=float(tolerance), passed=ok)


def check_capacities(cfg: ScenarioConfig) -> List[CheckResult]:
    """Analytic user capacities against simulation at 10, 20 and 30 dBm."""
    results = []
    for ps in (10.0, 20.0, 30.0):
        point = cfg.with_power(ps_dbm=ps)
        report = secrecy_report(point, point.uav, point.power.zeta)
        estimates = simulate_rates(point, point.uav, point.power.zeta)
        for name in ("c_user_r", "c_user_t"):
            mc = estimates.metric(name)
            tolerance = max(0.02 * abs(mc.mean), 3.0 * mc.se)
            results.append(_check(f"capacity_{name}_ps{ps:g}", abs(report.metric(name) - mc.mean), tolerance))
    return results


def check_eve_approximation(cfg: ScenarioConfig) -> List[CheckResult]:
    """Analytic eavesdropper capacities against exact uniform-phase simulation."""
    results = []
    mc = cfg.mc.replace(eve_phase_model=EvePhaseModel.EXACT_UNIFORM)
    for kappa in (10.0, 20.0):
        point = cfg.with_kappa(kappa).with_elements(20)
        report = secrecy_report(point, point.uav, point.power.zeta)
        estimates = simulate_rates(point, point.uav, point.power.zeta, mc)
        for name in ("c_eve_r", "c_eve_t"):
            reference = estimates.metric(name).mean
            relative = abs(report.metric(name) - reference) / max(abs(reference), 1e-12)
            results.append(_check(f"eve_{name}_kappa{kappa:g}", relative, 0.10))
    return results


def check_gamma_fit(cfg: ScenarioConfig, spread_scale: float = 1.0) -> List[CheckResult]:
    """KS distance of sampled cascaded power to its Gamma law, plus the U/V component moments."""
    results = []
    model = PhaseErrorModel(kappa=20.0)
    rng = np.random.default_rng(cfg.mc.seed)
    for elements in (16, 64):
        params = user_gamma_params(elements, cfg.fading.m_bv, cfg.fading.m_vu_r, model, cfg.gamma_fit)
        params = params.replace(spread=params.spread * spread_scale)
        u, v = sample_cascaded_components(
            elements, cfg.fading.m_bv, cfg.fading.m_vu_r, model, rng, cfg.mc.trials
        )
        x = u * u + v * v
        ks = stats.kstest(x, lambda q, p=params: gamma_cdf(p, q)).statistic
        results.append(_check(f"gamma_fit_ks_M{elements}", float(ks), 0.02))
        results.extend(_component_checks(params, u, v, elements))
    return results


def _component_checks(
    params: GammaChannelParams, u: np.ndarray, v: np.ndarray, elements: int
) -> List[CheckResult]:
    n = u.size
    results = [_check(f"uv_correlation_M{elements}", abs(float(np.corrcoef(u, v)[0, 1])), 0.01)]
    for label, samples, expected in (("sigma_u2", u, params.sigma_u2), ("sigma_v2", v, params.sigma_v2)):
        variance = float(np.var(samples, ddof=1))
        se = math.sqrt(float(np.var((samples - samples.mean()) ** 2, ddof=1)) / n)
        results.append(_check(f"{label}_M{elements}", abs(variance - expected), 3.0 * se))
    return results


def check_quadrature(cfg: ScenarioConfig) -> List[CheckResult]:
    unit = GammaChannelParams(shape=1.0, spread=1.0, elements=1, alpha2=1.0, phi1=1.0, phi2=1.0)
    exact = math.e * float(special.exp1(1.0)) / LN2
    value = mgf_capacity(unit, 1.0, 0.0, laguerre_rule(cfg.quad_order), cfg.quad_method)
    results = [_check("quadrature_exponential_identity", abs(value - exact), 1e-6)]

    # points drawn inside the Laguerre scale limit, so the fixed rules are compared
    rng = np.random.default_rng(cfg.mc.seed)
    coarse, fine = laguerre_rule(50), laguerre_rule(100)
    worst, kept = 0.0, 0
    for _ in range(100):
        shape, spread = float(rng.uniform(0.5, 20.0)), float(rng.uniform(0.5, 50.0))
        params = GammaChannelParams(shape=shape, spread=spread, elements=1, alpha2=1.0, phi1=1.0, phi2=1.0)
        total = float(rng.uniform(0.01, min(2.0, 0.5 * shape))) / spread
        k_int = total * float(rng.uniform(0.0, 0.5))
        k_sig = total - k_int
        kept += laguerre_estimate(params, k_sig, k_int, coarse)[1] <= LAGUERRE_TOLERANCE
        a = mgf_capacity(params, k_sig, k_int, coarse, cfg.quad_method)
        b = mgf_capacity(params, k_sig, k_int, fine, cfg.quad_method)
        worst = max(worst, abs(a - b))
    results.append(_check("quadrature_order_convergence", worst, 1e-6))
    results.append(_check("quadrature_laguerre_coverage", kept / 100.0, 0.9, passed=kept >= 90))
    return results


def _violations(values: Sequence[float]) -> int:
    return int(np.sum(np.diff(np.asarray(values)) < -1e-9))


def check_secrecy_trends(cfg: ScenarioConfig) -> List[CheckResult]:
    """Qualitative secrecy-rate behaviour in power, phase concentration and element count."""

    def secrecy(point: ScenarioConfig, region: Region) -> float:
        return mean_report(point, point.uav, point.power.zeta).secrecy(region)

    reflect = [secrecy(cfg.with_power(ps_dbm=p), Region.REFLECT) for p in POWER_GRID]
    transmit = [secrecy(cfg.with_power(ps_dbm=p), Region.TRANSMIT) for p in POWER_GRID]
    peak = int(np.argmax(transmit))
    results = [
        _check("reflect_secrecy_nondecreasing_in_ps", _violations(reflect), 0),
        _check(
            "transmit_secrecy_interior_peak",
            float(peak),
            0,
            passed=0 < peak < len(transmit) - 1 and transmit[-1] < transmit[peak],
        ),
    ]

    kappa_violations = 0
    for p in (ps for ps in POWER_GRID if ps <= 25.0):
        for region in Region:
            kappa_violations += _violations(
                [secrecy(cfg.with_power(ps_dbm=p).with_kappa(k), region) for k in (10.0, 15.0, 20.0)]
            )
    results.append(_check("secrecy_nondecreasing_in_kappa", kappa_violations, 0))

    element_violations = 0
    for p in (10.0, 15.0):
        for region in Region:
            element_violations += _violations(
                [secrecy(cfg.with_power(ps_dbm=p).with_elements(int(m)), region) for m in ELEMENT_GRID]
            )
    results.append(_check("secrecy_nondecreasing_in_elements", element_violations, 0))
    return results


def check_gss(cfg: ScenarioConfig, settings: OptimizerSettings) -> List[CheckResult]:
    def objective(zeta: float) -> float:
        return mean_report(cfg, cfg.uav, zeta).wssr

    zeta_gss = gss_zeta(objective, settings)
    grid = np.linspace(0.0, 1.0, 1001)
    zeta_grid = float(grid[int(np.argmax([objective(float(z)) for z in grid]))])
    return [
        _check("gss_matches_fine_grid", abs(zeta_gss - zeta_grid), 1e-2),
        _check("wssr_zeta_peak_interior", zeta_grid, 0.5, passed=0.0 < zeta_grid < 0.5),
    ]


def coarse_box(cfg: ScenarioConfig) -> SearchBox:
    """5 x 5 x 5 unit grid around the configured UAV, kept above 1 m."""
    z_min = max(cfg.uav.z - 2.0, 1.0)
    return SearchBox(
        x_min=cfg.uav.x - 2.0,
        x_max=cfg.uav.x + 2.0,
        y_min=cfg.uav.y - 2.0,
        y_max=cfg.uav.y + 2.0,
        z_min=z_min,
        z_max=z_min + 4.0,
        step=1.0,
    )


def check_grid_search(cfg: ScenarioConfig, settings: OptimizerSettings) -> List[CheckResult]:
    box = coarse_box(cfg)
    model = ClosedFormModel()
    zeta = cfg.power.zeta

    def objective(point: Position3D) -> float:
        return model.wssr(cfg, point, zeta)

    found = grid_search_uav(cfg, zeta, box, settings, objective)
    _, best = exhaustive_grid_search(box, objective, settings.n_jobs)
    result = alternating_optimize(cfg, box, settings, model)
    decreases = _violations([w for _, w in result.trace])
    return [
        _check("grid_search_matches_exhaustive", best - objective(found), 1e-9),
        _check("ao_trace_monotone", decreases, 0),
        _check("ao_iterations_within_k_max", result.iterations, settings.k_max),
    ]


def check_weights(cfg: ScenarioConfig) -> List[CheckResult]:
    biased = mean_report(cfg.with_weights(0.45, 0.55), cfg.uav, cfg.power.zeta)
    equal = mean_report(cfg.with_weights(0.5, 0.5), cfg.uav, cfg.power.zeta)
    finite = math.isfinite(biased.wssr) and math.isfinite(equal.wssr)
    gap = biased.wssr - equal.wssr
    ordered = gap > 0 if biased.r_sec_r > biased.r_sec_t else True
    return [
        _check("wssr_weights_0.45_0.55", biased.wssr, 0, passed=math.isfinite(biased.wssr)),
        _check("wssr_weights_0.5_0.5", equal.wssr, 0, passed=math.isfinite(equal.wssr)),
        _check("wssr_weight_ordering", gap, 0, passed=finite and ordered),
    ]


def check_determinism(cfg: ScenarioConfig) -> List[CheckResult]:
    small = cfg.with_mc(trials=min(cfg.mc.trials, 20_000), chunk_size=2048)
    serial = simulate_rates(small, small.uav, small.power.zeta, small.mc.replace(n_jobs=1))
    parallel = simulate_rates(small, small.uav, small.power.zeta, small.mc.replace(n_jobs=2))
    gap = max(abs(serial.metric(n).mean - parallel.metric(n).mean) for n in RATE_FIELDS)

    spec = SweepSpec(variable=SweepVariable.PS_DBM, values=(10.0, 20.0), outputs=("r_sec_r", "wssr"))
    tiny = small.with_mc(trials=2000)
    with tempfile.TemporaryDirectory() as tmp:
        first = run_sweep(tiny, spec, True, Path(tmp) / "a").read_bytes()
        second = run_sweep(tiny, spec, True, Path(tmp) / "b").read_bytes()
    return [
        _check("mc_serial_vs_parallel", gap, 1e-10),
        _check("csv_byte_identical", 0.0 if first == second else 1.0, 0),
    ]


def run_validate(
    cfg: ScenarioConfig,
    out_dir: Path,
    settings: Optional[OptimizerSettings] = None,
    spread_scale: float = 1.0,
) -> Tuple[List[CheckResult], Path]:
    """Run every check and write ``validation_report.csv``.

    ``spread_scale`` multiplies the fitted Gamma spread in the fit check
    and exists as a negative control.
    """
    settings = settings or OptimizerSettings(w1=cfg.w1, w2=cfg.w2)
    results: List[CheckResult] = []
    results.extend(check_capacities(cfg))
    results.extend(check_eve_approximation(cfg))
    results.extend(check_gamma_fit(cfg, spread_scale))
    results.extend(check_quadrature(cfg))
    results.extend(check_secrecy_trends(cfg))
    results.extend(check_gss(cfg, settings))
    results.extend(check_grid_search(cfg, settings))
    results.extend(check_weights(cfg))
    results.extend(check_determinism(cfg))

    frame = pd.DataFrame(
        [(r.check, r.measured, r.tolerance, r.passed) for r in results],
        columns=["check", "measured", "tolerance", "passed"],
    )
    path = write_table(
        frame, out_dir / VALIDATION_REPORT_NAME, config_metadata(cfg, **{"validate.spread_scale": spread_scale})
    )
    logger.info(Messages.VALIDATION_SUMMARY, sum(r.passed for r in results), len(results))
    return results, path
