"""CHSH quantifiers for two-qubit states: correlators, maximal violation,
and the violation-volume fraction with analytic, quadrature, and Monte
Carlo routes.

The volume fraction reduces the eight measurement angles to three variables

    x = u1.(v1 + v2)/|v1 + v2|,  y = u2.(v1 - v2)/|v1 - v2|,
    z = (1 + v1.v2)/2,

which are independent and uniform on [-1, 1]^2 x [0, 1] when the four
directions are drawn uniformly on the sphere. Violation happens where
mu * |x sqrt(z) + y sqrt(1 - z)| > 1, and the fraction of the box where that
holds has the closed form implemented by nvol_werner_analytic.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .linalg import tensor
from .nonlocality import OptimizerConfig
from .states import PAULIS, BlochVector, DensityMatrix

SQRT2 = math.sqrt(2)
TSIRELSON = 2 * SQRT2
MC_CHUNK = 1 << 16
MC_METHODS = ("angles", "xyz")


@dataclass(frozen=True)
class ChshSettings:
    """One CHSH measurement context: two directions per side."""

    u1: BlochVector
    u2: BlochVector
    v1: BlochVector
    v2: BlochVector


@dataclass(frozen=True)
class ReducedPoint:
    x: float
    y: float
    z: float

    def __post_init__(self):
        if not (-1.0 <= self.x <= 1.0 and -1.0 <= self.y <= 1.0):
            raise ValueError(f"x and y must lie in [-1, 1], got ({self.x}, {self.y})")
        if not 0.0 <= self.z <= 1.0:
            raise ValueError(f"z must lie in [0, 1], got {self.z}")


@dataclass(frozen=True)
class McConfig:
    n: int
    seed: int = 0
    chunk_size: int = MC_CHUNK
    method: str = "angles"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"sample count must be >= 1, got {self.n}")
        if self.chunk_size < 1:
            raise ValueError("chunk size must be positive")
        if self.method not in MC_METHODS:
            raise ValueError(f"method must be one of {MC_METHODS}, got {self.method!r}")


@dataclass(frozen=True)
class McEstimate:
    fraction: float
    std_error: float  # binomial: sqrt(f (1 - f) / n)
    n: int
    seed: int


def _check_two_qubit(rho: DensityMatrix):
    if rho.dims != (2, 2):
        raise ValueError(f"need a two-qubit state, got dims {rho.dims}")


def correlator(rho: DensityMatrix, u: BlochVector, v: BlochVector) -> float:
    """Tr[rho (u.sigma (x) v.sigma)]."""
    _check_two_qubit(rho)
    return float(np.real(np.trace(rho.matrix @ tensor(u.dot_sigma(), v.dot_sigma()))))


def correlation_matrix(rho: DensityMatrix) -> np.ndarray:
    """T[i, j] = Tr[rho (sigma_i (x) sigma_j)], so that
    correlator(rho, u, v) = u . T v."""
    _check_two_qubit(rho)
    t = np.empty((3, 3))
    for i, si in enumerate(PAULIS):
        for j, sj in enumerate(PAULIS):
            t[i, j] = float(np.real(np.trace(rho.matrix @ tensor(si, sj))))
    return t


def chsh_value(rho: DensityMatrix, s: ChshSettings) -> float:
    """|C(u1,v1) + C(u1,v2) + C(u2,v1) - C(u2,v2)|. At most 2 for Bell-local
    models and 2 sqrt(2) for quantum states."""
    c11 = correlator(rho, s.u1, s.v1)
    c12 = correlator(rho, s.u1, s.v2)
    c21 = correlator(rho, s.u2, s.v1)
    c22 = correlator(rho, s.u2, s.v2)
    return abs(c11 + c12 + c21 - c22)


def nmax_werner(mu: float) -> float:
    """max[0, mu sqrt(2) - 1]: how far the noisy singlet's best CHSH value
    exceeds the local bound, in units of the local bound."""
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must be in [0, 1], got {mu}")
    return max(0.0, mu * SQRT2 - 1.0)


def _nmax_objective(t: np.ndarray, angles) -> float:
    # for fixed v1, v2 the best u's are analytic:
    # max_u1,u2 B = |T(v1+v2)| + |T(v1-v2)|
    tv, pv, tw, pw = angles
    v1 = np.array([math.sin(tv) * math.cos(pv), math.sin(tv) * math.sin(pv), math.cos(tv)])
    v2 = np.array([math.sin(tw) * math.cos(pw), math.sin(tw) * math.sin(pw), math.cos(tw)])
    return float(np.linalg.norm(t @ (v1 + v2)) + np.linalg.norm(t @ (v1 - v2)))


def nmax_numeric(rho: DensityMatrix, cfg: OptimizerConfig = None) -> float:
    """Best CHSH value over all settings, reported as max(0, B/2 - 1).

    Grid plus simplex refinement over the two v directions; the u directions
    are eliminated analytically through the correlation matrix.
    """
    if cfg is None:
        cfg = OptimizerConfig()
    t = correlation_matrix(rho)
    thetas = np.linspace(0.0, math.pi, cfg.theta_points)
    phis = np.linspace(0.0, 2 * math.pi, cfg.phi_points, endpoint=False)
    tg, pg = np.meshgrid(thetas, phis, indexing="ij")
    tg = tg.ravel()
    pg = pg.ravel()
    st = np.sin(tg)
    dirs = np.stack([st * np.cos(pg), st * np.sin(pg), np.cos(tg)], axis=1)
    tv = dirs @ t.T  # T v for every grid direction
    plus = np.linalg.norm(tv[:, np.newaxis, :] + tv[np.newaxis, :, :], axis=2)
    minus = np.linalg.norm(tv[:, np.newaxis, :] - tv[np.newaxis, :, :], axis=2)
    grid = plus + minus
    flat = grid.ravel()
    ranked = np.argsort(-flat, kind="stable")[: cfg.restarts]
    best = float(flat[ranked[0]])
    n_grid = len(tg)
    for idx in ranked:
        i, j = divmod(int(idx), n_grid)
        x0 = np.array([tg[i], pg[i], tg[j], pg[j]])
        res = minimize(
            lambda x: -_nmax_objective(t, x),
            x0,
            method="Nelder-Mead",
            options={"maxiter": cfg.refine_iterations, "xatol": 1e-7, "fatol": cfg.value_tol},
        )
        best = max(best, float(-res.fun))
    return max(0.0, best / 2 - 1.0)


def bfrak(p: ReducedPoint) -> float:
    """|x sqrt(z) + y sqrt(1 - z)|, at most sqrt(2)."""
    return abs(p.x * math.sqrt(p.z) + p.y * math.sqrt(1.0 - p.z))


def nvol_werner_analytic(mu: float) -> float:
    """Fraction of the reduced box (equivalently, of sphere-uniform setting
    space) violating CHSH for the noisy singlet.

    Zero for mu <= 1/sqrt(2). Above threshold, with s0 = 1/(mu sqrt(2)):

        pi/2 - 3 s0 sqrt(1 - s0^2) - arcsin(s0) + 2 s0^2 arccos(s0)

    obtained by integrating the violating region in polar coordinates over
    one octant of the (x, y) plane and using its fourfold symmetry (the
    region lives entirely in the same-sign quadrants). At mu = 1 the value
    is (pi - 3)/2.
    """
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must be in [0, 1], got {mu}")
    if mu <= 1.0 / SQRT2:
        return 0.0
    s0 = 1.0 / (SQRT2 * mu)
    g = math.sqrt(max(0.0, 1.0 - s0 * s0))
    val = math.pi / 2 - 3 * s0 * g - math.asin(s0) + 2 * s0 * s0 * math.acos(s0)
    return min(max(val, 0.0), 1.0)


def nvol_quadrature(mu: float, resolution: int = 1000) -> float:
    """Deterministic midpoint-rule estimate of the same box fraction.

    Midpoints on all three axes; one z slice at a time to keep memory flat.
    """
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must be in [0, 1], got {mu}")
    if resolution < 100:
        raise ValueError(f"resolution must be >= 100 per axis, got {resolution}")
    if mu == 0.0:
        return 0.0
    res = int(resolution)
    xs = -1.0 + 2.0 * (np.arange(res) + 0.5) / res
    zs = (np.arange(res) + 0.5) / res
    gx, gy = np.meshgrid(xs, xs, indexing="ij")
    threshold = 1.0 / mu
    count = 0
    for z in zs:
        b = np.abs(gx * math.sqrt(z) + gy * math.sqrt(1.0 - z))
        count += int(np.count_nonzero(b > threshold))
    return count / res**3


def _chunk_rng(seed: int, k: int):
    # counter-based generator per chunk; chunk index is the spawn key, so
    # any worker can claim any chunk and the stream is identical
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(k,))))


def _sphere_from_uniform(cols) -> np.ndarray:
    # cols[:, 0] -> cos(theta) uniform on [-1, 1], cols[:, 1] -> azimuth
    z = 2.0 * cols[:, 0] - 1.0
    az = 2.0 * math.pi * cols[:, 1]
    s = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    return np.stack([s * np.cos(az), s * np.sin(az), z], axis=1)


def _mc_chunk_count(mu: float, cfg: McConfig, k: int) -> int:
    start = k * cfg.chunk_size
    m = min(cfg.chunk_size, cfg.n - start)
    rng = _chunk_rng(cfg.seed, k)
    if cfg.method == "xyz":
        draws = rng.random((m, 3))
        x = 2.0 * draws[:, 0] - 1.0
        y = 2.0 * draws[:, 1] - 1.0
        z = draws[:, 2]
        b = np.abs(x * np.sqrt(z) + y * np.sqrt(1.0 - z))
        return int(np.count_nonzero(mu * b > 1.0))
    draws = rng.random((m, 8))
    u1 = _sphere_from_uniform(draws[:, 0:2])
    u2 = _sphere_from_uniform(draws[:, 2:4])
    v1 = _sphere_from_uniform(draws[:, 4:6])
    v2 = _sphere_from_uniform(draws[:, 6:8])
    expr = np.abs(np.sum(u1 * (v1 + v2), axis=1) + np.sum(u2 * (v1 - v2), axis=1))
    return int(np.count_nonzero(expr > 2.0 / mu))


def nvol_mc(mu: float, cfg: McConfig, workers: int = 1) -> McEstimate:
    """Hit-or-miss estimate of the violation fraction.

    method "angles" samples the four directions uniformly on the sphere and
    tests the raw CHSH condition; method "xyz" samples the reduced box
    directly. Both estimate the same fraction. The sample stream is split
    into fixed-size chunks seeded independently of worker scheduling, so the
    count is bit-identical for any worker count.
    """
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must be in [0, 1], got {mu}")
    n_chunks = (cfg.n + cfg.chunk_size - 1) // cfg.chunk_size
    if mu == 0.0:
        count = 0  # condition is mu*B > 1, unreachable at mu = 0
    elif workers <= 1 or n_chunks == 1:
        count = sum(_mc_chunk_count(mu, cfg, k) for k in range(n_chunks))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            count = sum(pool.map(lambda k: _mc_chunk_count(mu, cfg, k), range(n_chunks)))
    frac = count / cfg.n
    return McEstimate(frac, math.sqrt(frac * (1.0 - frac) / cfg.n), cfg.n, cfg.seed)
