"""Sampler law checks: closed-form moments, empirical CF, KS against the quadrature CDF."""

import math

import numpy as np
import pytest
from scipy import stats

from stablespin import KernelGrid, StableParams, sample_standard_stable, stable_cdf_table


def draws(alpha, n, seed=0):
    rng = np.random.default_rng(seed)
    u1 = rng.random(n)
    u2 = rng.random(n)
    u1 = np.clip(u1, 1e-12, 1 - 1e-12)
    u2 = np.clip(u2, 1e-12, 1 - 1e-12)
    return sample_standard_stable(StableParams(alpha), u1, u2)


def test_deterministic_in_uniforms():
    p = StableParams(1.5)
    assert sample_standard_stable(p, 0.3, 0.7) == sample_standard_stable(p, 0.3, 0.7)


def test_gaussian_branch_variance():
    # alpha=2 draw is Gaussian with variance 2 (CF exp(-lambda^2))
    x = draws(2.0, 10 ** 5)
    m2 = np.mean(x ** 2)
    se = np.std(x ** 2, ddof=1) / math.sqrt(x.size)
    assert abs(m2 - 2.0) < 3 * se


def test_cauchy_branch():
    x = draws(1.0, 10 ** 5)
    # empirical CF at lambda=1 close to e^-1
    c = np.cos(x)
    se = np.std(c, ddof=1) / math.sqrt(x.size)
    assert abs(np.mean(c) - math.exp(-1.0)) < 3 * se
    # median ~ 0; median standard error for Cauchy is pi/(2 sqrt(n))
    assert abs(np.median(x)) < 3 * math.pi / (2 * math.sqrt(x.size))


def test_symmetry_alpha_15():
    x = draws(1.5, 10 ** 5)
    se = np.std(x, ddof=1) / math.sqrt(x.size)
    assert abs(np.mean(x)) < 3 * se


def test_empirical_cf_matches_convention():
    for alpha in (1.2, 1.5, 2.0):
        x = draws(alpha, 10 ** 5, seed=3)
        for lam in (0.5, 1.0, 2.0):
            c = np.cos(lam * x)
            se = np.std(c, ddof=1) / math.sqrt(x.size)
            assert abs(np.mean(c) - math.exp(-(lam ** alpha))) < 3 * se


def test_ks_against_quadrature_cdf():
    # sampler/kernel agreement at the 1% level
    for alpha in (1.2, 1.5, 2.0):
        p = StableParams(alpha)
        g = KernelGrid.for_params(p)
        x = draws(alpha, 2 * 10 ** 4, seed=11)
        y, F = stable_cdf_table(1.0, p, g)
        res = stats.kstest(x, lambda q: np.interp(q, y, F, left=0.0, right=1.0))
        assert res.pvalue > 0.01


def test_rejects_out_of_range_uniforms():
    p = StableParams(1.5)
    with pytest.raises(ValueError):
        sample_standard_stable(p, 0.0, 0.5)
    with pytest.raises(ValueError):
        sample_standard_stable(p, 0.5, 1.0)
