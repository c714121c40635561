import math

import pandas as pd
import pytest

from starsec import ClosedFormModel
from starsec._internal.experiments import (
    PRESETS,
    check_capacities,
    check_determinism,
    check_eve_approximation,
    check_gamma_fit,
    check_grid_search,
    check_gss,
    check_quadrature,
    check_secrecy_trends,
    check_weights,
    coarse_box,
    mc_metric,
    run_optimize,
    run_series,
    run_sweep,
    run_validate,
)
from starsec._internal.monte_carlo import simulate_all_pairs, simulate_rates
from starsec._internal.optimizer import exhaustive_grid_search, grid_axis, grid_search_uav
from starsec.types import EvePhaseModel, OptimizerSettings, SearchBox, SweepSeries, SweepSpec, SweepVariable

SPEC = SweepSpec(variable=SweepVariable.PS_DBM, values=(10.0, 20.0, 30.0), outputs=("r_sec_r", "wssr"))


def read_table(path) -> pd.DataFrame:
    return pd.read_csv(path, comment="#")


def header(path) -> dict:
    lines = [line for line in path.read_text(encoding="utf-8").splitlines() if line.startswith("# ")]
    return dict(line[2:].split(" = ", 1) for line in lines)


def passed(results) -> dict:
    return {r.check: r.passed for r in results}


def test_sweep_columns_and_rows(cfg, tmp_path):
    path = run_sweep(cfg, SPEC, False, tmp_path)
    assert path.name == "sweep_ps_dbm.csv"
    frame = read_table(path)
    assert list(frame.columns) == ["ps_dbm", "r_sec_r", "wssr"]
    assert frame["ps_dbm"].tolist() == [10.0, 20.0, 30.0]
    assert (frame["r_sec_r"] >= 0).all()
    meta = header(path)
    assert meta["starsec_version"] == '"0.1.0"'
    assert meta["power.rho"] == "0.3"
    assert meta["sweep.with_mc"] == "false"


def test_sweep_with_simulation_columns(cfg, tmp_path):
    path = run_sweep(cfg.with_mc(trials=1000), SPEC, True, tmp_path)
    frame = read_table(path)
    assert list(frame.columns) == [
        "ps_dbm",
        "r_sec_r",
        "wssr",
        "mc_r_sec_r_mean",
        "mc_r_sec_r_se",
        "mc_wssr_mean",
        "mc_wssr_se",
    ]
    assert (frame["mc_wssr_se"] >= 0).all()


def test_series_writes_one_file_per_value(cfg, tmp_path):
    series = SweepSeries(name="kappa", values=(10.0, 20.0))
    paths = run_series(cfg, SPEC, series, False, tmp_path)
    assert [p.name for p in paths] == ["sweep_ps_dbm_kappa10.csv", "sweep_ps_dbm_kappa20.csv"]
    assert header(paths[0])["phase.kappa"] == "10.0"


def test_weight_series_sets_both_weights(cfg, tmp_path):
    spec = SweepSpec(variable=SweepVariable.ZETA, values=(0.1, 0.2), outputs=("wssr",))
    paths = run_series(cfg, spec, SweepSeries(name="w1", values=(0.45, 0.5)), False, tmp_path)
    assert [p.name for p in paths] == ["sweep_zeta_w10.45.csv", "sweep_zeta_w10.5.csv"]
    assert header(paths[1])["system.w2"] == "0.5"


def test_presets_are_well_formed():
    assert len(PRESETS) == 7
    spec, series = PRESETS["wssr_vs_zeta"]
    assert spec.variable is SweepVariable.ZETA
    assert series is None
    spec, series = PRESETS["transmit_vs_power"]
    assert spec.values == tuple(float(p) for p in range(0, 55, 5))
    assert series is not None and series.values == (10.0, 15.0, 20.0)


def test_mc_metric_combines_regions(cfg):
    estimates = simulate_all_pairs(cfg.with_mc(trials=1000), cfg.uav, 0.2)
    r = mc_metric(estimates, "r_sec_r", 0.45, 0.55)
    t = mc_metric(estimates, "r_sec_t", 0.45, 0.55)
    wssr = mc_metric(estimates, "wssr", 0.45, 0.55)
    total = mc_metric(estimates, "r_sec_sum", 0.45, 0.55)
    assert wssr.mean == pytest.approx(0.45 * t.mean + 0.55 * r.mean)
    assert wssr.se == pytest.approx(math.hypot(0.45 * t.se, 0.55 * r.se))
    assert total.mean == pytest.approx(t.mean + r.mean)


def test_optimize_writes_trace_and_summary(cfg, tmp_path):
    box = SearchBox(x_min=0.0, x_max=1.0, y_min=0.0, y_max=1.0, z_min=9.0, z_max=10.0)
    result, trace_path, summary_path = run_optimize(cfg, box, OptimizerSettings(), tmp_path)
    trace = read_table(trace_path)
    assert list(trace.columns) == ["iteration", "wssr"]
    assert trace["iteration"].tolist()[0] == 0
    assert len(trace) == result.iterations + 1
    assert '"zeta_star"' in summary_path.read_text(encoding="utf-8")


def test_quadrature_checks_pass(cfg):
    results = check_quadrature(cfg)
    assert all(r.passed for r in results)
    coverage = next(r for r in results if r.check == "quadrature_laguerre_coverage")
    assert coverage.measured >= 0.9


def test_capacity_checks_pass(cfg):
    results = check_capacities(cfg)
    assert len(results) == 6
    assert all(r.passed for r in results)


def test_eve_approximation_checks_pass(small_cfg):
    results = check_eve_approximation(small_cfg)
    assert len(results) == 4
    for r in results:
        assert r.measured < 0.10, r.check


def test_gamma_fit_checks_pass(cfg):
    results = passed(check_gamma_fit(cfg))
    assert results["gamma_fit_ks_M16"]
    assert results["gamma_fit_ks_M64"]
    assert all(results.values())


def test_secrecy_trend_checks_pass(cfg):
    assert passed(check_secrecy_trends(cfg)) == {
        "reflect_secrecy_nondecreasing_in_ps": True,
        "transmit_secrecy_interior_peak": True,
        "secrecy_nondecreasing_in_kappa": True,
        "secrecy_nondecreasing_in_elements": True,
    }


def test_gss_matches_fine_grid_on_scenario(cfg):
    by_name = {r.check: r for r in check_gss(cfg, OptimizerSettings(w1=cfg.w1, w2=cfg.w2))}
    assert by_name["gss_matches_fine_grid"].passed
    assert by_name["gss_matches_fine_grid"].measured <= 1e-2
    assert 0.0 < by_name["wssr_zeta_peak_interior"].measured < 0.5
    assert by_name["wssr_zeta_peak_interior"].passed


def test_grid_search_matches_exhaustive_on_scenario_box(cfg):
    box = coarse_box(cfg)
    for axis in ("x", "y", "z"):
        assert len(grid_axis(*box.bounds(axis), box.step)) == 5
    model = ClosedFormModel()
    settings = OptimizerSettings(w1=cfg.w1, w2=cfg.w2)

    def objective(point):
        return model.wssr(cfg, point, cfg.power.zeta)

    found = grid_search_uav(cfg, cfg.power.zeta, box, settings, objective)
    _, best = exhaustive_grid_search(box, objective)
    assert objective(found) == pytest.approx(best, abs=1e-9)
    assert all(r.passed for r in check_grid_search(cfg, settings))


@pytest.mark.parametrize("kappa", [10.0, 20.0])
def test_eve_phase_models_agree(small_cfg, kappa):
    point = small_cfg.with_kappa(kappa)
    approx = simulate_rates(point, point.uav, point.power.zeta)
    exact_mc = point.mc.replace(eve_phase_model=EvePhaseModel.EXACT_UNIFORM)
    exact = simulate_rates(point, point.uav, point.power.zeta, exact_mc)
    for name in ("c_eve_r", "c_eve_t"):
        a, b = approx.metric(name).mean, exact.metric(name).mean
        assert abs(a - b) / b < 0.10, name


@pytest.mark.slow
def test_stochastic_outcomes_stable_across_seeds(cfg):
    outcomes = []
    for seed in (2024, 7):
        point = cfg.with_mc(seed=seed)
        results = check_eve_approximation(point.with_mc(trials=20_000)) + check_gamma_fit(point)
        results += check_capacities(point.with_mc(trials=20_000))
        outcomes.append(passed(results))
    assert outcomes[0] == outcomes[1]
    assert all(outcomes[0].values())


def test_weight_checks_pass(cfg):
    assert all(r.passed for r in check_weights(cfg))


def test_determinism_checks_pass(cfg):
    assert all(r.passed for r in check_determinism(cfg.with_mc(trials=4000)))


def test_scaled_spread_fails_fit_check(cfg):
    small = cfg.with_mc(trials=20_000)
    by_name = {r.check: r for r in check_gamma_fit(small, spread_scale=2.0)}
    assert not by_name["gamma_fit_ks_M16"].passed
    assert not by_name["gamma_fit_ks_M64"].passed


@pytest.mark.slow
def test_validation_report_is_written(cfg, tmp_path):
    results, path = run_validate(cfg, tmp_path)
    frame = read_table(path)
    assert list(frame.columns) == ["check", "measured", "tolerance", "passed"]
    assert len(frame) == len(results)
    assert frame["check"].is_unique
    failed = frame.loc[~frame["passed"], "check"].tolist()
    assert failed == []
    assert all(r.passed for r in results)
