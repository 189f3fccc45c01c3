"""Dense complex linear algebra for small bipartite systems.

Everything operates on plain complex ndarrays at dimensions that stay tiny
(products of 2 and 3), so dense LAPACK eigensolvers are the right tool.
Natural logarithm throughout; entropies are in nats.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Absolute tolerances, frozen for the whole package: conditioning is benign
# at these dimensions.
HERM_TOL = 1e-10
PSD_TOL = 1e-10
EIG_CLIP = 1e-12


def tensor(a, b, *rest):
    """Kronecker product. The first factor indexes the slow (left) block:
    entry ((i*db + k), (j*db + l)) = a[i,j] * b[k,l]."""
    out = np.kron(np.asarray(a), np.asarray(b))
    for m in rest:
        out = np.kron(out, np.asarray(m))
    return out


def partial_trace(rho, dims, keep: str):
    """Reduced matrix of one subsystem of a bipartite operator.

    dims is (d_a, d_b) with the first factor on the left (slow) index;
    keep is "A" or "B". Trace is preserved.
    """
    d_a, d_b = int(dims[0]), int(dims[1])
    m = np.asarray(rho)
    if m.shape != (d_a * d_b, d_a * d_b):
        raise ValueError(f"matrix shape {m.shape} inconsistent with dims ({d_a}, {d_b})")
    r = m.reshape(d_a, d_b, d_a, d_b)
    if keep == "A":
        return np.einsum("ikjk->ij", r)
    if keep == "B":
        return np.einsum("ikil->kl", r)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


@dataclass(frozen=True)
class Spectrum:
    """Eigendecomposition of a Hermitian matrix.

    values ascend; vectors[:, k] pairs with values[k] and the columns are
    orthonormal.
    """

    values: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=float)
        vecs = np.array(self.vectors, dtype=complex)
        vals.setflags(write=False)
        vecs.setflags(write=False)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "vectors", vecs)


def _canonicalize_degenerate(vals: np.ndarray, vecs: np.ndarray) -> np.ndarray:
    """Replace the eigenbasis of each degenerate cluster by the Gram-Schmidt
    orthonormalization of the canonical basis projected onto that eigenspace,
    so degenerate output does not depend on LAPACK's arbitrary rotation."""
    n = len(vals)
    out = vecs.copy()
    i = 0
    while i < n:
        j = i + 1
        while j < n and vals[j] - vals[j - 1] <= 1e-12:
            j += 1
        k = j - i
        if k > 1:
            basis = vecs[:, i:j]
            proj = basis @ basis.conj().T
            cols = []
            for e in range(n):
                cand = proj[:, e].copy()  # proj @ canonical e-th basis vector
                for c in cols:
                    cand -= c * np.vdot(c, cand)
                nrm = np.linalg.norm(cand)
                if nrm > 1e-6:
                    cols.append(cand / nrm)
                if len(cols) == k:
                    break
            if len(cols) == k:
                out[:, i:j] = np.column_stack(cols)
        i = j
    return out


def hermitian_spectrum(m) -> Spectrum:
    """Full spectrum of a Hermitian matrix, eigenvalues ascending.

    Inputs farther than HERM_TOL from self-adjoint are rejected with the
    measured asymmetry. Degenerate eigenspaces get a deterministic basis.
    """
    m = np.asarray(m, dtype=complex)
    asym = float(np.max(np.abs(m - m.conj().T)))
    if asym > HERM_TOL:
        raise ValueError(f"matrix is not Hermitian: max |m - m^H| = {asym:.3e}")
    vals, vecs = np.linalg.eigh(m)
    vecs = _canonicalize_degenerate(vals, vecs)
    return Spectrum(vals, vecs)


def entropy_from_eigenvalues(vals) -> float:
    """-sum(l ln l) over a probability-like spectrum; 0 ln 0 := 0.

    Eigenvalues below -PSD_TOL mean the input was not a state. Values in
    (-PSD_TOL, EIG_CLIP) are treated as exact zeros.
    """
    v = np.asarray(vals, dtype=float)
    lo = float(v.min()) if v.size else 0.0
    if lo < -PSD_TOL:
        raise ValueError(f"eigenvalue {lo:.3e} < -{PSD_TOL:.0e}: not a state")
    v = v[v > EIG_CLIP]
    if v.size == 0:
        return 0.0
    return max(float(-np.sum(v * np.log(v))), 0.0)


def von_neumann_entropy(rho) -> float:
    """S(rho) = -Tr[rho ln rho] in nats, clamped to [0, ln dim]."""
    m = np.asarray(rho, dtype=complex)
    asym = float(np.max(np.abs(m - m.conj().T)))
    if asym > HERM_TOL:
        raise ValueError(f"matrix is not Hermitian: max |m - m^H| = {asym:.3e}")
    s = entropy_from_eigenvalues(np.linalg.eigvalsh(m))
    return min(s, float(np.log(m.shape[0])))
