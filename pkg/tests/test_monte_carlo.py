import math

import numpy as np
import pytest

from starsec import MonteCarloModel, sample_nakagami, sample_vonmises, secrecy_report, simulate_rates
from starsec._internal.monte_carlo import chunk_sizes, sample_cascaded_power
from starsec._internal.rf_stats import user_gamma_params, vonmises_trig_moment
from starsec.errors import ConfigValueError
from starsec.types import EvePhaseModel, GammaFit, PhaseErrorModel
from starsec.types.reports import RATE_FIELDS


@pytest.mark.parametrize("m, omega", [(0.5, 1.0), (2.0, 1.0), (5.0, 3.0)])
def test_nakagami_power_moments(rng, m, omega):
    power = sample_nakagami(m, omega, rng, (200_000,)) ** 2
    se = power.std(ddof=1) / math.sqrt(power.size)
    assert abs(power.mean() - omega) < 4 * se
    fourth = power**2
    se4 = fourth.std(ddof=1) / math.sqrt(fourth.size)
    assert abs(fourth.mean() - omega**2 * (1 + 1 / m)) < 4 * se4


def test_nakagami_is_seeded():
    a = sample_nakagami(2.0, 1.0, np.random.default_rng(3), (100,))
    b = sample_nakagami(2.0, 1.0, np.random.default_rng(3), (100,))
    np.testing.assert_array_equal(a, b)


@pytest.mark.parametrize("kappa", [1.0, 20.0])
def test_vonmises_trig_moments(rng, kappa):
    phase = sample_vonmises(kappa, rng, (200_000,))
    for p in (1, 2):
        c = np.cos(p * phase)
        se = c.std(ddof=1) / math.sqrt(c.size)
        assert abs(c.mean() - vonmises_trig_moment(p, kappa)) < 4 * se
    assert abs(np.sin(phase).mean()) < 4 * np.sin(phase).std(ddof=1) / math.sqrt(phase.size)


@pytest.mark.parametrize("kappa", [0.0, 0.5, 50.0])
def test_vonmises_range(rng, kappa):
    phase = sample_vonmises(kappa, rng, (10_000,))
    assert np.all(phase >= -math.pi)
    assert np.all(phase <= math.pi)


def test_chunk_sizes():
    assert chunk_sizes(10, 4) == [4, 4, 2]
    assert chunk_sizes(8, 4) == [4, 4]
    assert chunk_sizes(3, 4) == [3]


def test_same_seed_same_estimates(small_cfg):
    a = simulate_rates(small_cfg, small_cfg.uav, 0.2)
    b = simulate_rates(small_cfg, small_cfg.uav, 0.2)
    assert a == b


def test_other_seed_differs(small_cfg):
    a = simulate_rates(small_cfg, small_cfg.uav, 0.2)
    b = simulate_rates(small_cfg.with_mc(seed=7), small_cfg.uav, 0.2)
    assert a.c_user_r.mean != b.c_user_r.mean


def test_parallel_matches_serial(small_cfg):
    serial = simulate_rates(small_cfg, small_cfg.uav, 0.2)
    parallel = simulate_rates(small_cfg.with_mc(n_jobs=2), small_cfg.uav, 0.2)
    assert serial == parallel


def test_vanishing_power_gives_zero_rates(small_cfg):
    quiet = small_cfg.with_power(ps_dbm=-200.0).with_mc(trials=2000)
    estimates = simulate_rates(quiet, quiet.uav, 0.2)
    for name in RATE_FIELDS:
        assert estimates.metric(name).mean == pytest.approx(0.0, abs=1e-9)


def test_standard_error_shrinks_with_trials(cfg):
    few = simulate_rates(cfg.with_mc(trials=4000), cfg.uav, 0.2)
    many = simulate_rates(cfg.with_mc(trials=16000), cfg.uav, 0.2)
    ratio = many.c_user_t.se / few.c_user_t.se
    assert 0.4 < ratio < 0.6


@pytest.mark.parametrize("name", ["c_user_r", "c_user_t"])
def test_user_capacity_agrees_with_closed_form(small_cfg, name):
    analytic = secrecy_report(small_cfg, small_cfg.uav, 0.2).metric(name)
    empirical = simulate_rates(small_cfg, small_cfg.uav, 0.2).metric(name)
    assert abs(analytic - empirical.mean) <= max(0.02 * empirical.mean, 3 * empirical.se)


def test_per_trial_clamp_dominates_ergodic(small_cfg):
    estimates = simulate_rates(small_cfg, small_cfg.uav, 0.2)
    assert estimates.r_sec_r_clamped.mean >= estimates.r_sec_r.mean
    assert estimates.r_sec_t_clamped.mean >= estimates.r_sec_t.mean
    assert estimates.trials == small_cfg.mc.trials


@pytest.mark.parametrize("eve_model", ["approx", "exact"])
def test_eve_phase_models_run(small_cfg, eve_model):
    cfg = small_cfg.with_mc(trials=2000, eve_phase_model=EvePhaseModel(eve_model))
    estimates = simulate_rates(cfg, cfg.uav, 0.2)
    assert estimates.c_user_r.mean > estimates.c_eve_r.mean


def test_power_mean_matches_moment_fit(rng):
    model = PhaseErrorModel(kappa=20.0)
    x = sample_cascaded_power(20, 2.0, 2.0, model, rng, 200_000)
    expected = user_gamma_params(20, 2.0, 2.0, model, GammaFit.MOMENT).spread
    assert abs(x.mean() - expected) < 4 * x.std(ddof=1) / math.sqrt(x.size)


def test_rejects_zero_trials(small_cfg):
    with pytest.raises(ConfigValueError):
        small_cfg.with_mc(trials=0)


def test_model_reports_pair_average(small_cfg):
    cfg = small_cfg.with_mc(trials=2000)
    model = MonteCarloModel()
    metrics = model.metrics(cfg, cfg.uav, 0.2)
    assert set(metrics) == set(RATE_FIELDS)
    assert model.wssr(cfg, cfg.uav, 0.2) == pytest.approx(
        cfg.w1 * metrics["r_sec_t"] + cfg.w2 * metrics["r_sec_r"]
    )
