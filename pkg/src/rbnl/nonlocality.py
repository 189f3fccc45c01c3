"""The state-level quantifier: maximal drop of irreality over local
observable pairs.

For pure states the maximum is attained on the Schmidt bases and equals the
entanglement entropy, so no search is needed. For mixed two-qubit states the
search runs over sharp qubit observables u.sigma and v.sigma, parametrized
by two spherical angles each: an exhaustive coarse grid localizes the basins
and derivative-free simplex refinement polishes the best candidates. The
objective uses the symmetric entropy form

    S(Phi_u rho) + S(Phi_v rho) - S(Phi_u Phi_v rho) - S(rho)

evaluated through 2x2 blocks in the rotated product basis, which avoids
forming any 4x4 dephased matrix in the hot loop.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .linalg import EIG_CLIP, entropy_from_eigenvalues, hermitian_spectrum
from .states import PVM, BlochVector, DensityMatrix, PureState


@dataclass(frozen=True)
class OptimizerConfig:
    """Search knobs for the two-qubit maximization.

    theta_points x phi_points is the coarse grid per sphere. The seed field
    is reserved plumbing: the whole search is deterministic, restarts come
    from the grid ranking with lexicographic tie-break.
    """

    theta_points: int = 12
    phi_points: int = 24
    refine_iterations: int = 200
    restarts: int = 8
    value_tol: float = 1e-8
    seed: int = 0

    def __post_init__(self):
        if self.theta_points < 1 or self.phi_points < 1:
            raise ValueError("grid resolutions must be positive")
        if self.refine_iterations < 1 or self.restarts < 1:
            raise ValueError("refinement iterations and restarts must be positive")


@dataclass(frozen=True)
class NrbResult:
    value: float
    argmax_u: BlochVector
    argmax_v: BlochVector
    eta: float  # |u . v| at the argmax

    def __post_init__(self):
        if self.value < -1e-12:
            raise ValueError(f"negative value {self.value:.3e}")
        if not -1e-12 <= self.eta <= 1 + 1e-12:
            raise ValueError(f"eta {self.eta!r} outside [0, 1]")


@dataclass(frozen=True)
class SchmidtDecomposition:
    """coefficients: k = min(d_a, d_b) probabilities, descending, sum 1.
    basis_a, basis_b: full orthonormal bases as matrix columns; the first k
    columns pair with the coefficients."""

    coefficients: np.ndarray
    basis_a: np.ndarray
    basis_b: np.ndarray

    def __post_init__(self):
        xi = np.array(self.coefficients, dtype=float)
        ua = np.array(self.basis_a, dtype=complex)
        ub = np.array(self.basis_b, dtype=complex)
        if xi.min() < -1e-10:
            raise ValueError(f"negative coefficient {xi.min():.3e}")
        if abs(xi.sum() - 1.0) > 1e-10:
            raise ValueError(f"coefficients sum to {xi.sum():.15g}, not 1")
        for u in (ua, ub):
            gram = u.conj().T @ u
            if np.max(np.abs(gram - np.eye(u.shape[1]))) > 1e-10:
                raise ValueError("basis not orthonormal")
        xi.setflags(write=False)
        ua.setflags(write=False)
        ub.setflags(write=False)
        object.__setattr__(self, "coefficients", xi)
        object.__setattr__(self, "basis_a", ua)
        object.__setattr__(self, "basis_b", ub)


@dataclass(frozen=True)
class PureNrbResult:
    """Value plus the attaining observables (projectors onto the Schmidt
    bases) for a pure state."""

    value: float
    pvm_a: PVM
    pvm_b: PVM
    decomposition: SchmidtDecomposition


def _complete_basis(cols, d):
    """Extend orthonormal columns to a full basis by Gram-Schmidt over the
    canonical basis, in canonical order."""
    out = [np.array(c, dtype=complex) for c in cols]
    for e in range(d):
        cand = np.zeros(d, dtype=complex)
        cand[e] = 1.0
        for c in out:
            cand -= c * np.vdot(c, cand)
        nrm = np.linalg.norm(cand)
        if nrm > 1e-6:
            out.append(cand / nrm)
        if len(out) == d:
            break
    return np.column_stack(out)


def schmidt(psi: PureState) -> SchmidtDecomposition:
    """Biorthogonal decomposition via the spectrum of the A marginal.

    The B vectors for nonzero coefficients are (<alpha_i| (x) I)|psi>
    rescaled, which is automatically orthonormal; zero-coefficient slots are
    filled by canonical completion. Reconstruction
    sum_i sqrt(xi_i)|alpha_i>|beta_i> recovers psi exactly (no phase left
    over, since each beta_i already carries its phase from psi).
    """
    d_a, d_b = psi.dims
    mat = psi.vector.reshape(d_a, d_b)
    spec = hermitian_spectrum(mat @ mat.conj().T)
    order = np.argsort(-spec.values, kind="stable")
    vals = spec.values[order]
    basis_a = spec.vectors[:, order]
    k = min(d_a, d_b)
    xi = np.clip(vals[:k], 0.0, None)
    xi = xi / xi.sum()
    bcols = []
    for i in range(k):
        if xi[i] > EIG_CLIP:
            b = basis_a[:, i].conj() @ mat
            bcols.append(b / np.linalg.norm(b))
    basis_b = _complete_basis(bcols, d_b)
    return SchmidtDecomposition(xi, basis_a, basis_b)


def entanglement_entropy(psi: PureState) -> float:
    """Entropy of either marginal, in nats."""
    return entropy_from_eigenvalues(schmidt(psi).coefficients)


def _basis_pvm(basis: np.ndarray) -> PVM:
    projs = tuple(np.outer(basis[:, i], basis[:, i].conj())
                  for i in range(basis.shape[1]))
    return PVM(projs)


def nrb_pure(psi: PureState) -> PureNrbResult:
    """For pure states the maximal irreality drop equals the entanglement
    entropy and is attained by measuring the Schmidt bases on both sides."""
    dec = schmidt(psi)
    value = entropy_from_eigenvalues(dec.coefficients)
    return PureNrbResult(value, _basis_pvm(dec.basis_a), _basis_pvm(dec.basis_b), dec)


# ---------------------------------------------------------------------------
# two-qubit search


def _spinors(theta, phi):
    """Eigenvector pair of u.sigma for u = (sin t cos p, sin t sin p, cos t).

    Returns shape (..., 2, 2): [..., 0, :] is the +1 eigenvector,
    [..., 1, :] the -1 eigenvector.
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    c = np.cos(theta / 2)
    s = np.sin(theta / 2)
    e = np.exp(1j * phi)
    plus = np.stack([c + 0j, e * s], axis=-1)
    minus = np.stack([-np.conj(e) * s, c + 0j], axis=-1)
    return np.stack([plus, minus], axis=-2)


def _angles_to_vec(theta, phi):
    st = np.sin(theta)
    return np.array([st * np.cos(phi), st * np.sin(phi), np.cos(theta)])


def _xlogx(p):
    return np.where(p > EIG_CLIP, p * np.log(np.maximum(p, EIG_CLIP)), 0.0)


def _block_entropy(blocks):
    """Entropy of a direct sum of 2x2 Hermitian blocks, shape (..., 2, 2, 2)
    with axis -3 enumerating the blocks. Closed-form 2x2 eigenvalues."""
    a = blocks[..., 0, 0].real
    d = blocks[..., 1, 1].real
    c = blocks[..., 0, 1]
    h = np.sqrt(((a - d) / 2) ** 2 + (c * c.conj()).real)
    lam = np.stack([(a + d) / 2 + h, (a + d) / 2 - h], axis=-1)
    lam = np.clip(lam, 0.0, None)
    return -np.sum(_xlogx(lam), axis=(-2, -1))


def _pair_objective(rho4, s_rho, angles):
    """Irreality drop for one observable pair, angles = (tu, pu, tv, pv)."""
    u = _spinors(angles[0], angles[1])
    v = _spinors(angles[2], angles[3])
    m = np.einsum("ai,ikjl,aj->akl", u.conj(), rho4, u)
    n = np.einsum("bk,ikjl,bl->bij", v.conj(), rho4, v)
    s_a = float(_block_entropy(m))
    s_b = float(_block_entropy(n))
    p = np.einsum("akl,bk,bl->ab", m, v.conj(), v).real
    p = np.clip(p, 0.0, None)
    s_ab = -float(np.sum(_xlogx(p)))
    return s_a + s_b - s_ab - s_rho


def nrb_two_qubit(rho: DensityMatrix, cfg: OptimizerConfig = OptimizerConfig()) -> NrbResult:
    """Maximize the irreality drop over sharp qubit observable pairs.

    Coarse grid over both spheres evaluated in one vectorized pass, then
    Nelder-Mead refinement from the best cfg.restarts grid points (ties
    broken by lexicographic angle order). The returned value never falls
    below the grid maximum.

    The search space is rank-1 qubit observables. That is the natural space
    for two qubits, but for general mixed states there is no guarantee that
    coarser observables could not do better; callers should treat the result
    as a maximum over sharp observables.
    """
    d_a, d_b = rho.dims
    if (d_a, d_b) != (2, 2):
        raise ValueError(f"two-qubit search needs dims (2, 2), got ({d_a}, {d_b})")
    rho4 = rho.matrix.reshape(2, 2, 2, 2)
    s_rho = entropy_from_eigenvalues(np.linalg.eigvalsh(rho.matrix))

    thetas = np.linspace(0.0, math.pi, cfg.theta_points)
    phis = np.linspace(0.0, 2 * math.pi, cfg.phi_points, endpoint=False)
    tg, pg = np.meshgrid(thetas, phis, indexing="ij")
    tg = tg.ravel()
    pg = pg.ravel()
    spin = _spinors(tg, pg)  # (n, 2, 2), same grid for both spheres

    # site-A blocks and their entropies, one per grid direction
    m = np.einsum("nai,ikjl,naj->nakl", spin.conj(), rho4, spin, optimize=True)
    s_a = _block_entropy(m)
    n = np.einsum("nbk,ikjl,nbl->nbij", spin.conj(), rho4, spin, optimize=True)
    s_b = _block_entropy(n)
    # joint dephasing probabilities for every (u, v) grid pair
    p = np.einsum("nakl,mbk,mbl->nmab", m, spin.conj(), spin, optimize=True).real
    p = np.clip(p, 0.0, None)
    s_ab = -np.sum(_xlogx(p), axis=(2, 3))
    grid = s_a[:, np.newaxis] + s_b[np.newaxis, :] - s_ab - s_rho

    flat = grid.ravel()
    ranked = np.argsort(-flat, kind="stable")[: cfg.restarts]
    n_grid = len(tg)
    iu0, iv0 = divmod(int(ranked[0]), n_grid)
    best_val = float(flat[ranked[0]])
    best_angles = np.array([tg[iu0], pg[iu0], tg[iv0], pg[iv0]])
    for idx in ranked:
        iu, iv = divmod(int(idx), n_grid)
        x0 = np.array([tg[iu], pg[iu], tg[iv], pg[iv]])
        res = minimize(
            lambda x: -_pair_objective(rho4, s_rho, x),
            x0,
            method="Nelder-Mead",
            options={
                "maxiter": cfg.refine_iterations,
                "xatol": 1e-7,
                "fatol": cfg.value_tol,
            },
        )
        if -res.fun > best_val:
            best_val = float(-res.fun)
            best_angles = res.x
    u = _angles_to_vec(best_angles[0], best_angles[1])
    v = _angles_to_vec(best_angles[2], best_angles[3])
    u /= np.linalg.norm(u)
    v /= np.linalg.norm(v)
    eta = min(abs(float(u @ v)), 1.0)
    return NrbResult(max(best_val, 0.0), BlochVector(u), BlochVector(v), eta)


def _h(x: float) -> float:
    """(1 + x) ln(1 + x), extended by its limit 0 at x = -1."""
    one = 1.0 + x
    if one <= 0.0:
        return 0.0
    return one * math.log(one)


def nrb_werner_closed_form(mu: float) -> float:
    """Closed form for the noisy-singlet family:
    (1/4)[h(3 mu) + h(-mu) - 2 h(mu)] with h(x) = (1+x) ln(1+x).

    Equals ln 2 at mu = 1 and 0 at mu = 0; monotone increasing in between.
    """
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must be in [0, 1], got {mu}")
    return 0.25 * (_h(3 * mu) + _h(-mu) - 2 * _h(mu))


def werner_dephased_spectra(mu: float, u: BlochVector, v: BlochVector):
    """Analytic spectra of the three dephasings of the noisy singlet.

    Returns (spec_a, spec_b, spec_ab), each descending. Dephasing either
    side alone gives {(1+mu)/4 x2, (1-mu)/4 x2}; dephasing both gives
    {(1+mu*eta)/4 x2, (1-mu*eta)/4 x2} with eta = |u . v|.
    """
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must be in [0, 1], got {mu}")
    eta = min(abs(float(u.components @ v.components)), 1.0)
    one_side = np.array([(1 + mu) / 4, (1 + mu) / 4, (1 - mu) / 4, (1 - mu) / 4])
    both = np.array([(1 + mu * eta) / 4, (1 + mu * eta) / 4,
                     (1 - mu * eta) / 4, (1 - mu * eta) / 4])
    return one_side, one_side.copy(), both
