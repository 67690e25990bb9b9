"""One-dimensional symmetric alpha-stable and Ornstein-Uhlenbeck machinery.

Convention used throughout: an increment of the driving noise over duration t
has characteristic function exp(-t|lambda|^alpha).  At alpha=2 this means the
generator is the full second derivative and the time-t marginal is N(0, 2t).

The transition density is obtained by numerical Fourier inversion

    p(t; x, y) = (1/2pi) * int exp(-t|lambda|^alpha + i(x-y)lambda) dlambda,

always reduced to unit effective time through the self-similarity
p(t; 0, u) = t^(-1/alpha) p(1; 0, t^(-1/alpha) u).  The unit-time density is
evaluated by a graded Gauss-Legendre cosine rule near the origin and by the
Bergstroem asymptotic tail series far out; both carry explicit error
estimates, and an estimate above tolerance raises QuadratureError rather than
returning a bad number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad
from scipy.special import gammaln

from .errors import QuadratureError

__all__ = [
    "StableParams",
    "KernelGrid",
    "OUKernelQuery",
    "TailBound",
    "CosineModes",
    "FourierIntegrable",
    "sample_standard_stable",
    "stable_density",
    "stable_cdf_table",
    "ou_kernel",
    "ou_apply",
    "ou_apply_vec",
    "ou_stationary_density",
    "ou_abs_moment",
    "fractional_generator_apply",
    "compute_c_alpha",
    "kernel_tv_distance",
]

# Fourier inversion is used for |u| <= _U_CROSSOVER (unit-time scale); beyond
# it the Bergstroem series with _TAIL_TERMS terms is accurate to ~1e-16 for
# alpha in [1, 2].
_U_CROSSOVER = 30.0
_TAIL_TERMS = 10

# exp(-lambda_max^alpha) <= 1e-18 makes the truncated Fourier tail negligible
_LOG_TRUNC = 41.5


@dataclass(frozen=True)
class StableParams:
    """Stability index under the exp(-t|lambda|^alpha) convention."""

    alpha: float

    def __post_init__(self):
        a = self.alpha
        if not (isinstance(a, (int, float)) and math.isfinite(a) and 0.0 < a <= 2.0):
            raise ValueError(f"alpha must lie in (0, 2], got {a!r}")


@dataclass(frozen=True)
class KernelGrid:
    """Discretization parameters for kernel quadratures.

    lambda_max applies to the unit-effective-time integral (operations rescale
    by self-similarity first); n_nodes caps the Fourier node budget; y_max is
    the unit-time spatial truncation radius, scaled by tau^(1/alpha) per call.
    """

    lambda_max: float
    n_nodes: int = 4096
    y_max: float = 50.0

    def __post_init__(self):
        if not (self.lambda_max > 0 and math.isfinite(self.lambda_max)):
            raise ValueError("lambda_max must be positive and finite")
        if self.n_nodes < 2:
            raise ValueError("n_nodes must be >= 2")
        if not (self.y_max > 0 and math.isfinite(self.y_max)):
            raise ValueError("y_max must be positive and finite")

    @classmethod
    def for_params(cls, params: StableParams, n_nodes: int = 4096, y_max: float = 50.0) -> "KernelGrid":
        """Default grid: exp(-lambda_max^alpha) < 1e-16 at unit effective time."""
        return cls(lambda_max=_LOG_TRUNC ** (1.0 / params.alpha), n_nodes=n_nodes, y_max=y_max)


@dataclass(frozen=True)
class OUKernelQuery:
    """Pointwise kernel query: time t >= 0, start x, target y."""

    t: float
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.t) and self.t >= 0):
            raise ValueError("t must be finite and >= 0")
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("x and y must be finite")


@dataclass(frozen=True)
class TailBound:
    """Declared envelope of an integrand: |f(y)| <= scale*|y|^power for |y| >= radius.

    scale = 0 declares compact support inside [-radius, radius].  power may be
    negative (decay) or positive (growth); growth must stay strictly below
    alpha for integrability against the kernel tail.
    """

    radius: float
    scale: float
    power: float = 0.0

    def envelope(self, y: float) -> float:
        if self.scale == 0.0:
            return 0.0
        return self.scale * max(abs(y), self.radius) ** self.power


# ---------------------------------------------------------------------------
# sampling


def sample_standard_stable(params: StableParams, u1, u2):
    """Map two open-interval uniforms to one standard symmetric stable draw.

    Chambers-Mallows-Stuck construction, branch-free in alpha: the same
    expression reduces to 2*sqrt(W)*sin(theta) at alpha=2 (Gaussian, variance
    2) and tan(theta) at alpha=1 (Cauchy).  Accepts scalars or arrays and is a
    deterministic function of (u1, u2).
    """
    a = params.alpha
    u1 = np.asarray(u1, dtype=float)
    u2 = np.asarray(u2, dtype=float)
    if np.any((u1 <= 0.0) | (u1 >= 1.0)) or np.any((u2 <= 0.0) | (u2 >= 1.0)):
        raise ValueError("u1, u2 must lie strictly inside (0, 1)")
    theta = np.pi * (u1 - 0.5)
    w = -np.log(u2)
    val = (
        np.sin(a * theta)
        / np.cos(theta) ** (1.0 / a)
        * (np.cos((1.0 - a) * theta) / w) ** ((1.0 - a) / a)
    )
    return float(val) if val.ndim == 0 else val


# ---------------------------------------------------------------------------
# unit-time density: graded cosine rule + Bergstroem tail series

_GL_X, _GL_W = np.polynomial.legendre.leggauss(16)


@lru_cache(maxsize=64)
def _cosine_rule(alpha: float, lambda_max: float, n_cap: int, max_phase: float, geom_ratio: float):
    """Nodes/weights for int_0^lambda_max exp(-lambda^alpha) cos(u*lambda) dlambda, |u| <= _U_CROSSOVER.

    Geometric panels toward 0 absorb the lambda^alpha cusp; panels above 1 are
    split so the phase u*width stays below max_phase, which keeps 16-point
    Gauss-Legendre at ~1e-14 per panel.
    """
    edges = [0.0]
    top = min(1.0, lambda_max)
    x = top * 2.0 ** -30
    while x < top:
        edges.append(x)
        x *= geom_ratio
    x = 1.0
    while x < lambda_max:
        edges.append(x)
        x += 1.0
    edges.append(lambda_max)
    edges = np.unique(np.asarray(edges))

    nodes = []
    weights = []
    for a0, b0 in zip(edges[:-1], edges[1:]):
        parts = max(1, math.ceil((b0 - a0) * _U_CROSSOVER / max_phase))
        sub = np.linspace(a0, b0, parts + 1)
        for lo, hi in zip(sub[:-1], sub[1:]):
            half = 0.5 * (hi - lo)
            mid = 0.5 * (hi + lo)
            nodes.append(mid + half * _GL_X)
            weights.append(half * _GL_W)
    lam = np.concatenate(nodes)
    if lam.size > n_cap:
        raise QuadratureError(
            f"cosine rule needs {lam.size} nodes but n_nodes={n_cap}; increase KernelGrid.n_nodes",
            estimate=float(lam.size),
            tolerance=float(n_cap),
        )
    w = np.concatenate(weights) * np.exp(-lam ** alpha)
    return lam, w


@lru_cache(maxsize=64)
def _tail_coeffs(alpha: float, n_terms: int = _TAIL_TERMS) -> tuple:
    """Bergstroem coefficients: p1(u) ~ sum_k c_k u^{-(k*alpha+1)} for large u."""
    k = np.arange(1, n_terms + 1, dtype=float)
    sign = np.where(np.arange(1, n_terms + 1) % 2 == 1, 1.0, -1.0)
    logmag = gammaln(k * alpha + 1.0) - gammaln(k + 1.0)
    c = sign * np.exp(logmag) * np.sin(np.pi * k * alpha / 2.0) / np.pi
    return tuple(c)


def _tail_density(alpha: float, u: np.ndarray) -> np.ndarray:
    c = np.asarray(_tail_coeffs(alpha))
    k = np.arange(1, c.size + 1, dtype=float)
    return (c[None, :] * u[:, None] ** (-(k * alpha + 1.0))[None, :]).sum(axis=1)


def _tail_mass(alpha: float, Y: float) -> tuple[float, float]:
    """One-sided tail mass int_Y^inf p1 plus a truncation-error estimate."""
    c = np.asarray(_tail_coeffs(alpha))
    k = np.arange(1, c.size + 1, dtype=float)
    terms = c * Y ** (-k * alpha) / (k * alpha)
    return float(terms.sum()), float(abs(terms[-1]))


def _tail_abs_moment(alpha: float, Y: float, beta: float) -> tuple[float, float]:
    """One-sided int_Y^inf |y|^beta p1(y) dy via the tail series (beta < alpha)."""
    c = np.asarray(_tail_coeffs(alpha))
    k = np.arange(1, c.size + 1, dtype=float)
    terms = c * Y ** (beta - k * alpha) / (k * alpha - beta)
    return float(terms.sum()), float(abs(terms[-1]))


@lru_cache(maxsize=8)
def _de_nodes_01(n: int = 121, T: float = 3.5):
    """tanh-sinh nodes/weights on (0, 1); robust to endpoint singularities."""
    t = np.linspace(-T, T, n)
    h = t[1] - t[0]
    s = 0.5 * np.pi * np.sinh(t)
    x = 0.5 * (1.0 + np.tanh(s))
    w = h * 0.25 * np.pi * np.cosh(t) / np.cosh(s) ** 2
    keep = (x > 0.0) & (x < 1.0) & (w > 0.0)
    return x[keep], w[keep]


def _cos_apply(u: np.ndarray, lam: np.ndarray, w: np.ndarray) -> np.ndarray:
    out = np.empty(u.shape, dtype=float)
    chunk = max(1, int(4_000_000 // max(lam.size, 1)))
    for lo in range(0, u.size, chunk):
        hi = min(lo + chunk, u.size)
        out[lo:hi] = np.cos(np.multiply.outer(u[lo:hi], lam)) @ w
    return out / np.pi


def _p1(alpha: float, u, grid: KernelGrid, *, max_phase: float = 8.0, geom_ratio: float = 2.0) -> np.ndarray:
    """Unit-time density p(1; 0, u) of the exp(-|lambda|^alpha) law, vectorized."""
    u = np.abs(np.atleast_1d(np.asarray(u, dtype=float)))
    out = np.empty_like(u)
    near = u <= _U_CROSSOVER
    if near.any():
        lam, w = _cosine_rule(alpha, grid.lambda_max, grid.n_nodes, max_phase, geom_ratio)
        out[near] = _cos_apply(u[near], lam, w)
    if (~near).any():
        out[~near] = _tail_density(alpha, u[~near])
    return out


def _p1_error_estimate(alpha: float, grid: KernelGrid, probe_u=None) -> float:
    """Compare the default rule against a twice-coarsened one at probe points."""
    if probe_u is None:
        probe_u = np.linspace(0.0, _U_CROSSOVER, 13)
    probe_u = np.asarray(probe_u, dtype=float)
    fine = _p1(alpha, probe_u, grid)
    coarse = _p1(alpha, probe_u, grid, max_phase=16.0, geom_ratio=4.0)
    return float(np.max(np.abs(fine - coarse)))


def _clamp_density(vals: np.ndarray, context: str) -> np.ndarray:
    bad = vals < -1e-12
    if bad.any():
        raise QuadratureError(
            f"{context}: density value {vals.min():.3e} below -1e-12 signals an under-resolved grid",
            estimate=float(-vals.min()),
            tolerance=1e-12,
        )
    return np.where(vals < 0.0, 0.0, vals)


def _density_vals(t: float, u, params: StableParams, grid: KernelGrid) -> np.ndarray:
    """p(t; 0, u) for an array of displacements u, via self-similarity."""
    root = t ** (1.0 / params.alpha)
    scaled = np.atleast_1d(np.asarray(u, dtype=float)) / root
    vals = _p1(params.alpha, scaled, grid) / root
    return _clamp_density(vals, "stable_density")


def stable_density(t: float, x: float, y: float, params: StableParams, grid: KernelGrid, *, tol: float = 1e-9) -> float:
    """Transition density p(t; x, y); depends on (x, y) only through x - y.

    Raises QuadratureError when the internal resolution check estimates an
    error above tol.
    """
    if not (t > 0 and math.isfinite(t)):
        raise ValueError("t must be positive and finite")
    root = t ** (1.0 / params.alpha)
    u = abs(x - y) / root
    fine = _p1(params.alpha, u, grid)[0]
    coarse = _p1(params.alpha, u, grid, max_phase=16.0, geom_ratio=4.0)[0]
    est = abs(fine - coarse) / root
    if est > tol:
        raise QuadratureError(
            f"stable_density resolution estimate {est:.3e} exceeds tol {tol:.3e}",
            estimate=est,
            tolerance=tol,
        )
    return float(_clamp_density(np.array([fine / root]), "stable_density")[0])


def _simpson(vals: np.ndarray, h: float, axis: int = -1) -> np.ndarray:
    n = vals.shape[axis]
    if n % 2 == 0:
        raise ValueError("Simpson rule needs an odd number of points")
    w = np.ones(n)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return np.tensordot(vals, w, axes=([axis], [0])) * (h / 3.0)


@lru_cache(maxsize=32)
def _unit_table(alpha: float, grid: KernelGrid, n_points: int):
    """Unit-time density table on [-y_max, y_max] plus one-sided tail mass."""
    y = np.linspace(-grid.y_max, grid.y_max, n_points)
    p = _clamp_density(_p1(alpha, y, grid), "unit density table")
    mass, mass_err = _tail_mass(alpha, grid.y_max)
    return y, p, mass, mass_err


def _effective_time(t: float, alpha: float) -> float:
    # alpha*t overflow-safe: exp(-inf) = 0
    return (1.0 - math.exp(-alpha * t)) / alpha if math.isfinite(t) else 1.0 / alpha


# ---------------------------------------------------------------------------
# Ornstein-Uhlenbeck kernel and semigroup application


def ou_kernel(query: OUKernelQuery, params: StableParams, grid: KernelGrid, *, tol: float = 1e-9) -> float:
    """OU transition density p((1-e^{-alpha t})/alpha; e^{-t} x, y).

    A t=0 pointwise query is rejected: the kernel degenerates to a point mass
    with no density.
    """
    if query.t == 0.0:
        raise ValueError("ou_kernel at t=0 is a point mass; pointwise density query rejected")
    tau = _effective_time(query.t, params.alpha)
    shift = math.exp(-query.t) * query.x
    return stable_density(tau, shift, query.y, params, grid, tol=tol)


def ou_apply_vec(
    f: Callable[[np.ndarray], np.ndarray],
    t: float,
    xs,
    params: StableParams,
    grid: KernelGrid,
    *,
    tail: TailBound,
    n_points: int | None = None,
    tol: float = 1e-6,
) -> np.ndarray:
    """Vectorized ou_apply over initial points xs (shared kernel table)."""
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if t == 0.0:
        return np.asarray(f(xs), dtype=float)
    if t < 0 or not math.isfinite(t):
        raise ValueError("t must be finite and >= 0")
    a = params.alpha
    tau = _effective_time(t, a)
    root = tau ** (1.0 / a)
    shifts = np.exp(-t) * xs
    n = n_points if n_points is not None else 4 * grid.n_nodes + 1
    if n % 2 == 0:
        n += 1

    W = grid.y_max * root
    w_grid = np.linspace(-W, W, n)
    h = w_grid[1] - w_grid[0]
    p_vals = _clamp_density(_p1(a, w_grid / root, grid) / root, "ou_apply")

    # central piece: int_{-W}^{W} p(tau;0,w) f(shift+w) dw, per shift
    fvals = np.empty((xs.size, n))
    chunk = max(1, int(4_000_000 // n))
    for lo in range(0, xs.size, chunk):
        hi = min(lo + chunk, xs.size)
        fvals[lo:hi] = f(shifts[lo:hi, None] + w_grid[None, :])
    central = _simpson(fvals * p_vals[None, :], h, axis=1)
    half = _simpson(fvals[:, ::2] * p_vals[None, ::2], 2 * h, axis=1)
    grid_err = np.max(np.abs(central - half)) / 15.0

    # tail pieces via the Bergstroem series, w = +-W/v with v in (0, 1);
    # tanh-sinh nodes absorb the v^(alpha-1-power) endpoint behaviour
    v, vw = _de_nodes_01()
    w_tail = W / v
    c = np.asarray(_tail_coeffs(a))
    k = np.arange(1, c.size + 1, dtype=float)
    p_tail = (c[None, :] * tau ** k[None, :] * w_tail[:, None] ** (-(k * a + 1.0))[None, :]).sum(axis=1)
    p_last = np.abs(c[-1]) * tau ** k[-1] * w_tail ** (-(k[-1] * a + 1.0))
    jac = W / v ** 2
    f_hi = np.asarray(f(shifts[:, None] + w_tail[None, :]), dtype=float)
    f_lo = np.asarray(f(shifts[:, None] - w_tail[None, :]), dtype=float)
    tails = ((f_hi + f_lo) * (p_tail * jac)[None, :]) @ vw
    env = np.array([tail.envelope(wt) for wt in w_tail])
    series_err = float(((np.abs(p_last) * jac * env) @ vw) * 2.0)

    # integrability of the declared envelope against the kernel tail
    if tail.scale != 0.0 and tail.power >= a:
        raise QuadratureError(
            f"declared tail growth power {tail.power} is not integrable against the "
            f"alpha={a} kernel tail",
            estimate=math.inf,
            tolerance=tol,
        )
    est = grid_err + series_err
    if est > tol:
        raise QuadratureError(
            f"ou_apply truncation/resolution estimate {est:.3e} exceeds tol {tol:.3e}",
            estimate=float(est),
            tolerance=tol,
        )
    return central + tails


def ou_apply(
    f: Callable[[np.ndarray], np.ndarray],
    t: float,
    x: float,
    params: StableParams,
    grid: KernelGrid,
    *,
    tail: TailBound,
    n_points: int | None = None,
    tol: float = 1e-6,
) -> float:
    """Quadrature of int ou_kernel(t, x, y) f(y) dy; returns f(x) exactly at t=0.

    f must be vectorized over numpy arrays; its tail behaviour is declared via
    ``tail`` so the truncation error can be estimated (and rejected when above
    tol).
    """
    if t == 0.0:
        return float(np.asarray(f(np.array([float(x)])))[0])
    return float(ou_apply_vec(f, t, [x], params, grid, tail=tail, n_points=n_points, tol=tol)[0])


def ou_stationary_density(y: float, params: StableParams, grid: KernelGrid, *, tol: float = 1e-9) -> float:
    """Density of the invariant law, p(1/alpha; 0, y)."""
    return stable_density(1.0 / params.alpha, 0.0, y, params, grid, tol=tol)


@lru_cache(maxsize=32)
def _unit_abs_moment(alpha: float, beta: float, grid: KernelGrid) -> float:
    y, p, _, _ = _unit_table(alpha, grid, 4 * grid.n_nodes + 1)
    central = _simpson(np.abs(y) ** beta * p, y[1] - y[0])
    tail, _ = _tail_abs_moment(alpha, grid.y_max, beta)
    return float(central + 2.0 * tail)


def ou_abs_moment(t: float, beta: float, params: StableParams, grid: KernelGrid) -> float:
    """S_t[|x|^beta](0) = [(1-e^{-alpha t})/alpha]^{beta/alpha} * int p(1;0,y)|y|^beta dy.

    Requires 1 <= beta < alpha, mirroring the moment hypothesis; t may be
    math.inf for the stationary value.
    """
    a = params.alpha
    if not (1.0 <= beta < a):
        raise ValueError(f"need 1 <= beta < alpha, got beta={beta}, alpha={a} (moment diverges otherwise)")
    if t < 0:
        raise ValueError("t must be >= 0")
    factor = _effective_time(t, a) ** (beta / a)
    return factor * _unit_abs_moment(a, beta, grid)


# ---------------------------------------------------------------------------
# fractional generator


@dataclass(frozen=True)
class CosineModes:
    """Function declared by its discrete spectrum: f(x) = sum a_j cos(w_j x + phi_j)."""

    modes: tuple[tuple[float, float, float], ...]

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        for amp, freq, phase in self.modes:
            out = out + amp * np.cos(freq * x + phase)
        return out


@dataclass(frozen=True)
class FourierIntegrable:
    """Function declared through its transform fhat(lambda) = int f(x) e^{-i lambda x} dx.

    fhat must be real and even (symmetric f) with |fhat| <= decay_scale *
    exp(-decay_rate * lambda); the declared decay fixes the inversion
    truncation radius.
    """

    fhat: Callable[[np.ndarray], np.ndarray]
    decay_rate: float
    decay_scale: float


def fractional_generator_apply(f, x: float, params: StableParams, grid: KernelGrid, *, tol: float = 1e-10) -> float:
    """Action of the generator with Fourier symbol -|lambda|^alpha at x.

    At alpha=2 this is the full second derivative under the module's
    characteristic-function convention.  Constants (zero-frequency modes) are
    killed exactly.
    """
    a = params.alpha
    if isinstance(f, CosineModes):
        out = 0.0
        for amp, freq, phase in f.modes:
            out += -amp * abs(freq) ** a * math.cos(freq * x + phase)
        return out
    if isinstance(f, FourierIntegrable):
        if f.decay_rate <= 0.0:
            raise QuadratureError(
                "declared Fourier decay rate must be positive for the inversion to truncate",
                estimate=math.inf,
                tolerance=tol,
            )
        lam_cut = 1.0
        while f.decay_scale * math.exp(-f.decay_rate * lam_cut) * lam_cut ** a > tol / 10.0:
            lam_cut *= 1.5
            if lam_cut > 1e6:
                raise QuadratureError("declared Fourier decay too slow to truncate", tolerance=tol)

        def integrand(lam):
            return lam ** a * f.fhat(lam)

        if abs(x) < 1e-300:
            val, err = quad(integrand, 0.0, lam_cut, limit=400)
        else:
            val, err = quad(integrand, 0.0, lam_cut, weight="cos", wvar=x, limit=400)
        if err > tol:
            raise QuadratureError(
                f"fractional generator quadrature error {err:.3e} exceeds tol {tol:.3e}",
                estimate=err,
                tolerance=tol,
            )
        return -val / np.pi
    raise TypeError("f must be CosineModes or FourierIntegrable (declared Fourier data)")


def compute_c_alpha(params: StableParams) -> float:
    """Normalizing constant C_alpha = -int (cos y - 1)|y|^{-(1+alpha)} dy, 0 < alpha < 2.

    Adaptive quadrature with the singularity split off at 0; the oscillatory
    piece uses a cosine-weighted rule.  Rejected at alpha=2 where the integral
    diverges and the generator becomes local.
    """
    a = params.alpha
    if not (0.0 < a < 2.0):
        raise ValueError("C_alpha is defined for 0 < alpha < 2 (diverges as alpha -> 2)")
    head, _ = quad(lambda y: (1.0 - np.cos(y)) / y ** (1.0 + a), 0.0, 1.0, limit=200)
    L = 1e6
    osc, _ = quad(lambda y: y ** (-(1.0 + a)), 1.0, L, weight="cos", wvar=1.0, limit=800)
    # int_1^inf y^{-1-a} dy = 1/a; |int_L^inf cos(y) y^{-1-a} dy| <= 2 L^{-1-a}
    return 2.0 * (head + 1.0 / a - osc)


def kernel_tv_distance(t1: float, t2: float, params: StableParams, grid: KernelGrid, *, tol: float = 1e-4) -> float:
    """L1 distance between the OU kernels from 0 at times t1 and t2.

    This is the integral int |p(tau(t2);0,y) - p(tau(t1);0,y)| dy, symmetric
    in (t1, t2) and exactly 0 at t1 = t2; always <= 2.
    """
    if t1 <= 0 or t2 <= 0:
        raise ValueError("t1, t2 must be positive")
    a = params.alpha
    tau1 = _effective_time(t1, a)
    tau2 = _effective_time(t2, a)
    if tau1 == tau2:
        return 0.0
    root1 = tau1 ** (1.0 / a)
    root2 = tau2 ** (1.0 / a)
    Y = grid.y_max * max(root1, root2)
    n = 4 * grid.n_nodes + 1
    y = np.linspace(-Y, Y, n)
    p1v = _clamp_density(_p1(a, y / root1, grid) / root1, "kernel_tv_distance")
    p2v = _clamp_density(_p1(a, y / root2, grid) / root2, "kernel_tv_distance")
    central = _simpson(np.abs(p2v - p1v), y[1] - y[0])
    # in the far tail the kernel ordering follows the effective time
    m1, e1 = _tail_mass_scaled(a, Y, tau1)
    m2, e2 = _tail_mass_scaled(a, Y, tau2)
    est = e1 + e2
    if est > tol:
        raise QuadratureError(
            f"kernel_tv_distance tail estimate {est:.3e} exceeds tol {tol:.3e}",
            estimate=est,
            tolerance=tol,
        )
    return float(central + 2.0 * abs(m2 - m1))


def _tail_mass_scaled(alpha: float, Y: float, tau: float) -> tuple[float, float]:
    """int_Y^inf p(tau; 0, y) dy via the series in tau^k y^{-k alpha}."""
    c = np.asarray(_tail_coeffs(alpha))
    k = np.arange(1, c.size + 1, dtype=float)
    terms = c * tau ** k * Y ** (-k * alpha) / (k * alpha)
    return float(terms.sum()), float(abs(terms[-1]))


def stable_cdf_table(t: float, params: StableParams, grid: KernelGrid, *, n_points: int = 200_001):
    """CDF of p(t; 0, .) tabulated on a grid, for KS-style oracles.

    Returns (y, F).  The left tail mass at -y_max comes from the Bergstroem
    series, the interior from cumulative trapezoid integration of the density.
    """
    if not (t > 0 and math.isfinite(t)):
        raise ValueError("t must be positive and finite")
    a = params.alpha
    root = t ** (1.0 / a)
    Y = grid.y_max * root
    y = np.linspace(-Y, Y, n_points)
    p = _clamp_density(_p1(a, y / root, grid) / root, "stable_cdf_table")
    h = y[1] - y[0]
    left_mass, _ = _tail_mass(a, grid.y_max)
    F = np.concatenate([[0.0], np.cumsum(0.5 * (p[1:] + p[:-1]) * h)]) + left_mass
    F = np.clip(F, 0.0, 1.0)
    return y, F
