import math

import numpy as np
import pytest
from scipy import stats

from starsec import (
    eff_phase_variance,
    eve_gamma_params,
    nakagami_abs_mean,
    user_gamma_params,
    vonmises_trig_moment,
)
from starsec._internal.monte_carlo import sample_cascaded_components
from starsec._internal.rf_stats import component_moments, eve_resultant, fit_gamma_params, gamma_cdf
from starsec.errors import DistributionError
from starsec.types import EvePhaseModel, GammaFit, PhaseErrorModel

KAPPA_20 = PhaseErrorModel(kappa=20.0)


@pytest.mark.parametrize("kappa", [0.0, 1.0, 20.0, 500.0])
def test_zeroth_trig_moment_is_one(kappa):
    assert vonmises_trig_moment(0, kappa) == 1.0


def test_first_trig_moment_values():
    assert vonmises_trig_moment(1, 0.0) == 0.0
    assert vonmises_trig_moment(1, 10.0) == pytest.approx(0.94860, abs=1e-5)
    assert vonmises_trig_moment(2, 20.0) == pytest.approx(0.90253, abs=1e-5)


def test_trig_moment_monotonicity():
    kappas = [0.5, 1.0, 5.0, 10.0, 20.0, 100.0]
    for p in (1, 2, 3):
        values = [vonmises_trig_moment(p, k) for k in kappas]
        assert np.all(np.diff(values) > 0)
    for k in kappas:
        values = [vonmises_trig_moment(p, k) for p in range(1, 6)]
        assert np.all(np.diff(values) < 0)


def test_trig_moment_rejects_negative_kappa():
    with pytest.raises(DistributionError):
        vonmises_trig_moment(1, -1.0)


def test_nakagami_abs_mean_values():
    assert nakagami_abs_mean(1.0) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-12)
    assert nakagami_abs_mean(2.0) == pytest.approx(0.93999, abs=1e-5)
    assert nakagami_abs_mean(0.5) == pytest.approx(math.sqrt(2 / math.pi), rel=1e-12)
    assert nakagami_abs_mean(1e6) == pytest.approx(1.0, abs=1e-6)


def test_nakagami_abs_mean_rejects_small_m():
    with pytest.raises(DistributionError):
        nakagami_abs_mean(0.4)


def test_eff_phase_variance_limits():
    floor = 2 * math.pi**2 / 3
    assert eff_phase_variance(PhaseErrorModel(kappa=1e7)) == pytest.approx(floor, abs=1e-5)
    assert eff_phase_variance(KAPPA_20) == pytest.approx(6.6309, abs=2e-3)
    assert math.isinf(eff_phase_variance(PhaseErrorModel(kappa=0.0)))


def test_symbolic_fit_with_perfect_phases():
    for elements in (1, 8, 64):
        params = fit_gamma_params(elements, math.sqrt(0.5), 1.0, 1.0, 1.0, GammaFit.COHERENT)
        assert params.shape == pytest.approx(elements / 4)
        assert params.spread == pytest.approx(elements**2 / 2)


def test_user_params_bundled_values():
    params = user_gamma_params(20, 2.0, 2.0, KAPPA_20)
    assert params.shape == pytest.approx(17.71, rel=5e-3)
    assert params.spread == pytest.approx(296.7, rel=1e-3)


@pytest.mark.parametrize("elements", [1, 16, 64])
def test_user_shape_matches_component_moments(elements):
    params = user_gamma_params(elements, 3.0, 1.5, PhaseErrorModel(kappa=12.0))
    assert params.shape == pytest.approx(params.mu**2 / (4 * params.sigma_u2), rel=1e-12)
    assert params.spread == pytest.approx(params.mu**2, rel=1e-12)


def test_eve_params_bundled_values():
    params = eve_gamma_params(20, 2.0, 2.0, KAPPA_20)
    assert params.resultant == pytest.approx(math.exp(-3.3155), rel=2e-3)
    alpha4 = params.alpha2**2
    expected = 20 * alpha4 * params.resultant**2 / (2 * (1 + params.phi2))
    assert params.shape == pytest.approx(expected, rel=1e-2)


@pytest.mark.parametrize("kappa", [1.0, 5.0, 10.0, 20.0])
def test_eve_law_weaker_than_user(kappa):
    model = PhaseErrorModel(kappa=kappa)
    user = user_gamma_params(20, 2.0, 2.0, model)
    eve = eve_gamma_params(20, 2.0, 2.0, model)
    assert eve.shape * eve.spread < user.shape * user.spread


def test_incoherent_eve_is_floored():
    params = eve_gamma_params(20, 2.0, 2.0, PhaseErrorModel(kappa=0.0))
    assert eve_resultant(PhaseErrorModel(kappa=0.0)) == 1e-12
    assert params.shape > 0
    assert params.spread > 0


def test_moment_fit_matches_component_mean():
    params = user_gamma_params(20, 2.0, 2.0, KAPPA_20, GammaFit.MOMENT)
    mu, su2, sv2 = component_moments(20, params.alpha2, params.phi1, params.phi2)
    assert params.spread == pytest.approx(mu**2 + su2 + sv2)
    assert params.fit is GammaFit.MOMENT


@pytest.mark.parametrize("elements", [16, 64])
def test_moment_fit_ks_distance(rng, elements):
    params = user_gamma_params(elements, 2.0, 2.0, KAPPA_20, GammaFit.MOMENT)
    u, v = sample_cascaded_components(elements, 2.0, 2.0, KAPPA_20, rng, 100_000)
    ks = stats.kstest(u * u + v * v, lambda x: gamma_cdf(params, x)).statistic
    assert ks < 0.02


def test_moment_eve_components_are_balanced():
    params = eve_gamma_params(20, 2.0, 2.0, KAPPA_20, GammaFit.MOMENT)
    assert params.phi2 == pytest.approx(params.resultant**4)
    assert params.sigma_u2 == pytest.approx(10.0, rel=1e-2)
    assert params.sigma_v2 == pytest.approx(10.0, rel=1e-4)
    assert params.shape == pytest.approx(1.0, rel=2e-2)


@pytest.mark.parametrize("eve_model", [EvePhaseModel.WRAPPED_NORMAL_APPROX, EvePhaseModel.EXACT_UNIFORM])
def test_moment_eve_law_matches_sampled_power(rng, eve_model):
    params = eve_gamma_params(20, 2.0, 2.0, KAPPA_20, GammaFit.MOMENT)
    u, v = sample_cascaded_components(20, 2.0, 2.0, KAPPA_20, rng, 100_000, eve_model)
    x = u * u + v * v
    assert abs(x.mean() - params.spread) < max(0.04 * params.spread, 4 * x.std(ddof=1) / math.sqrt(x.size))
    ks = stats.kstest(x, lambda q: gamma_cdf(params, q)).statistic
    assert ks < 0.02


def test_components_uncorrelated_with_predicted_variances(rng):
    n = 100_000
    params = user_gamma_params(64, 2.0, 2.0, KAPPA_20)
    u, v = sample_cascaded_components(64, 2.0, 2.0, KAPPA_20, rng, n)
    assert abs(np.corrcoef(u, v)[0, 1]) < 0.015
    assert u.mean() == pytest.approx(params.mu, abs=4 * u.std() / math.sqrt(n))
    for samples, expected in ((u, params.sigma_u2), (v, params.sigma_v2)):
        se = math.sqrt(np.var((samples - samples.mean()) ** 2, ddof=1) / n)
        assert np.var(samples, ddof=1) == pytest.approx(expected, abs=4 * se)
