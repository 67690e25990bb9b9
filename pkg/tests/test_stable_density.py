"""Density inversion checks against closed forms and an independent quadrature oracle."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from stablespin import KernelGrid, QuadratureError, StableParams, stable_density
from stablespin.stable import _p1, _simpson, _tail_mass, _unit_table


def gaussian_density(t, u):
    # variance 2t under the exp(-t lambda^2) convention
    return math.exp(-u * u / (4.0 * t)) / (2.0 * math.sqrt(math.pi * t))


def cauchy_density(t, u):
    return t / (math.pi * (t * t + u * u))


def oracle_p1(alpha, u):
    """Independent route: adaptive QUADPACK cosine-weighted quadrature."""
    lam_max = 60.0
    if u == 0.0:
        val, _ = quad(lambda l: np.exp(-(l ** alpha)), 0.0, lam_max, limit=500)
    else:
        val, _ = quad(lambda l: np.exp(-(l ** alpha)), 0.0, lam_max, weight="cos", wvar=u, limit=500)
    return val / math.pi


def test_gaussian_closed_form():
    p = StableParams(2.0)
    g = KernelGrid.for_params(p)
    for t in (0.1, 0.5, 1.0, 4.0):
        for u in (0.0, 0.3, 1.0, 2.5):
            assert stable_density(t, u, 0.0, p, g) == pytest.approx(gaussian_density(t, u), abs=1e-9)


def test_cauchy_closed_form():
    p = StableParams(1.0)
    g = KernelGrid.for_params(p)
    for t in (0.1, 1.0, 3.0):
        for u in (0.0, 0.7, 2.0, 10.0):
            assert stable_density(t, 0.0, u, p, g) == pytest.approx(cauchy_density(t, u), abs=1e-9)


def test_value_at_coincidence():
    p2 = StableParams(2.0)
    p1c = StableParams(1.0)
    assert stable_density(1.0, 0.0, 0.0, p2, KernelGrid.for_params(p2)) == pytest.approx(
        1.0 / (2.0 * math.sqrt(math.pi)), abs=1e-9
    )
    assert stable_density(1.0, 0.0, 0.0, p1c, KernelGrid.for_params(p1c)) == pytest.approx(
        1.0 / math.pi, abs=1e-9
    )


def test_against_quadpack_oracle():
    for alpha in (1.1, 1.5, 1.9):
        p = StableParams(alpha)
        g = KernelGrid.for_params(p)
        for u in (0.0, 0.4, 2.2, 7.7, 18.0, 29.5):
            assert _p1(alpha, [u], g)[0] == pytest.approx(oracle_p1(alpha, u), abs=5e-10)


def test_self_similarity_scaling():
    p = StableParams(1.5)
    g = KernelGrid.for_params(p)
    t, y = 2.0, 0.7
    lhs = stable_density(t, 0.0, y, p, g)
    rhs = t ** (-1 / 1.5) * stable_density(1.0, 0.0, t ** (-1 / 1.5) * y, p, g)
    assert lhs == pytest.approx(rhs, abs=1e-8)


def test_symmetry_exact():
    p = StableParams(1.5)
    g = KernelGrid.for_params(p)
    rng = np.random.default_rng(7)
    for _ in range(5):
        x, y = rng.normal(size=2) * 3
        assert stable_density(1.0, x, y, p, g) == stable_density(1.0, y, x, p, g)


def test_normalization_all_alphas():
    # int p(t; 0, y) dy = 1 within 1e-6 for every alpha and t in the scan
    for alpha in (1.0, 1.2, 1.5, 1.8, 2.0):
        p = StableParams(alpha)
        g = KernelGrid.for_params(p)
        y, pv, mass, _ = _unit_table(alpha, g, 4 * g.n_nodes + 1)
        total = _simpson(pv, y[1] - y[0]) + 2.0 * mass
        for t in (0.1, 1.0, 10.0):
            # self-similar reduction makes the normalization t-independent
            assert total == pytest.approx(1.0, abs=1e-6)


def test_tail_series_matches_fourier_at_crossover():
    from stablespin.stable import _tail_density

    for alpha in (1.05, 1.2, 1.5, 1.9):
        p = StableParams(alpha)
        g = KernelGrid.for_params(p)
        # both evaluation routes agree at the same point u = 30 (the crossover)
        fourier_val = _p1(alpha, [30.0], g)[0]
        series_val = _tail_density(alpha, np.array([30.0]))[0]
        assert abs(fourier_val - series_val) < 1e-12
        assert _p1(alpha, [31.0], g)[0] == pytest.approx(oracle_p1(alpha, 31.0), abs=1e-10)


def test_underresolved_grid_is_an_error():
    p = StableParams(1.0)
    g = KernelGrid(lambda_max=41.5, n_nodes=64)
    with pytest.raises(QuadratureError):
        stable_density(1.0, 0.0, 0.3, p, g)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        StableParams(0.0)
    with pytest.raises(ValueError):
        StableParams(2.5)
    p = StableParams(1.5)
    g = KernelGrid.for_params(p)
    with pytest.raises(ValueError):
        stable_density(0.0, 0.0, 0.0, p, g)
    with pytest.raises(ValueError):
        KernelGrid(lambda_max=-1.0)


def test_tail_mass_alpha1_matches_cauchy():
    mass, _ = _tail_mass(1.0, 50.0)
    exact = 0.5 - math.atan(50.0) / math.pi
    assert mass == pytest.approx(exact, abs=1e-12)
