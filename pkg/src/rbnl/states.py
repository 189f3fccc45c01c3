"""Constructors and validated containers for states and observables.

Conventions fixed here and inherited everywhere: subsystem A is the left
Kronecker factor, product basis ordered |00>, |01>, |10>, |11> row-major,
and the singlet carries the sign (|01> - |10>)/sqrt(2).
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .linalg import HERM_TOL, PSD_TOL

TRACE_TOL = 1e-10
NORM_TOL = 1e-10
BLOCH_TOL = 1e-12

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)
for _p in PAULIS:
    _p.setflags(write=False)


def _freeze(obj, name, arr):
    arr.setflags(write=False)
    object.__setattr__(obj, name, arr)


@dataclass(frozen=True)
class DensityMatrix:
    """Trace-one positive semidefinite Hermitian matrix with a bipartite
    dimension annotation (d_a, d_b). All invariants are checked on
    construction and violations raise ValueError naming the invariant."""

    matrix: np.ndarray
    dims: tuple[int, int]

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        d_a, d_b = (int(d) for d in self.dims)
        if d_a < 1 or d_b < 1 or m.shape != (d_a * d_b, d_a * d_b):
            raise ValueError(
                f"dims ({d_a}, {d_b}) inconsistent with matrix shape {m.shape}")
        asym = float(np.max(np.abs(m - m.conj().T)))
        if asym > HERM_TOL:
            raise ValueError(f"not Hermitian: max |m - m^H| = {asym:.3e}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace is {tr.real:.12g}, not 1")
        lo = float(np.linalg.eigvalsh(m)[0])
        if lo < -PSD_TOL:
            raise ValueError(f"negative eigenvalue {lo:.3e}: not positive semidefinite")
        _freeze(self, "matrix", m)
        object.__setattr__(self, "dims", (d_a, d_b))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


@dataclass(frozen=True)
class PureState:
    """Normalized state vector with bipartite dims (d_a, d_b)."""

    vector: np.ndarray
    dims: tuple[int, int]

    def __post_init__(self):
        v = np.array(self.vector, dtype=complex).reshape(-1)
        d_a, d_b = (int(d) for d in self.dims)
        if d_a < 1 or d_b < 1 or v.shape != (d_a * d_b,):
            raise ValueError(
                f"dims ({d_a}, {d_b}) inconsistent with vector length {v.shape[0]}")
        nrm = float(np.linalg.norm(v))
        if abs(nrm - 1.0) > NORM_TOL:
            raise ValueError(f"norm is {nrm:.12g}, not 1")
        _freeze(self, "vector", v)
        object.__setattr__(self, "dims", (d_a, d_b))

    def density(self) -> DensityMatrix:
        return DensityMatrix(np.outer(self.vector, self.vector.conj()), self.dims)


@dataclass(frozen=True)
class PVM:
    """Projective observable: orthogonal projectors summing to the identity,
    with real labels playing the role of eigenvalues."""

    projectors: tuple
    labels: tuple = None

    def __post_init__(self):
        projs = tuple(np.array(p, dtype=complex) for p in self.projectors)
        if not projs:
            raise ValueError("PVM needs at least one projector")
        d = projs[0].shape[0]
        for p in projs:
            if p.shape != (d, d):
                raise ValueError("projector shapes disagree")
            if np.max(np.abs(p - p.conj().T)) > HERM_TOL:
                raise ValueError("projector not Hermitian")
            if np.max(np.abs(p @ p - p)) > HERM_TOL:
                raise ValueError("projector not idempotent")
        for i in range(len(projs)):
            for j in range(i + 1, len(projs)):
                if np.max(np.abs(projs[i] @ projs[j])) > HERM_TOL:
                    raise ValueError("projectors not pairwise orthogonal")
        if np.max(np.abs(sum(projs) - np.eye(d))) > HERM_TOL:
            raise ValueError("projectors do not sum to the identity")
        labels = self.labels
        if labels is None:
            labels = tuple(float(k) for k in range(len(projs)))
        else:
            labels = tuple(float(x) for x in labels)
            if len(labels) != len(projs):
                raise ValueError("label count does not match projector count")
        for p in projs:
            p.setflags(write=False)
        object.__setattr__(self, "projectors", projs)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return self.projectors[0].shape[0]


@dataclass(frozen=True)
class BlochVector:
    """Unit direction on the Bloch sphere."""

    components: np.ndarray

    def __post_init__(self):
        c = np.array(self.components, dtype=float).reshape(-1)
        if c.shape != (3,):
            raise ValueError("Bloch vector needs exactly 3 components")
        nrm = float(np.linalg.norm(c))
        if abs(nrm - 1.0) > BLOCH_TOL:
            raise ValueError(f"norm is {nrm:.15g}, not 1")
        _freeze(self, "components", c)

    def dot_sigma(self) -> np.ndarray:
        """The observable u . sigma as a 2x2 matrix."""
        x, y, z = self.components
        return x * PAULI_X + y * PAULI_Y + z * PAULI_Z


def singlet() -> PureState:
    v = np.zeros(4, dtype=complex)
    v[1] = 1 / np.sqrt(2)
    v[2] = -1 / np.sqrt(2)
    return PureState(v, (2, 2))


def werner(mu: float) -> DensityMatrix:
    """(1 - mu) I/4 + mu |singlet><singlet| for mu in [0, 1]."""
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must be in [0, 1], got {mu}")
    s = singlet().vector
    m = (1.0 - mu) * np.eye(4, dtype=complex) / 4 + mu * np.outer(s, s.conj())
    return DensityMatrix(m, (2, 2))


def bloch_pvm(u: BlochVector) -> PVM:
    """Sharp qubit observable along u: projectors (I +- u.sigma)/2 with
    labels +1 and -1."""
    op = u.dot_sigma()
    eye = np.eye(2, dtype=complex)
    return PVM(((eye + op) / 2, (eye - op) / 2), (1.0, -1.0))


def qutrit_family(gamma: float) -> PureState:
    """(|00> + gamma |11> + |22>)/sqrt(2 + gamma^2) on a 3x3 system."""
    if gamma < 0:
        raise ValueError(f"gamma must be nonnegative, got {gamma}")
    v = np.zeros(9, dtype=complex)
    v[0] = 1.0
    v[4] = gamma
    v[8] = 1.0
    return PureState(v / np.linalg.norm(v), (3, 3))


def _rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_pure(d_a: int, d_b: int, seed) -> PureState:
    """Rotation-invariant random pure state: complex standard normal
    components, normalized. Deterministic per seed."""
    rng = _rng(seed)
    n = d_a * d_b
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return PureState(v / np.linalg.norm(v), (d_a, d_b))


def random_density(d_a: int, d_b: int, rank: int, seed) -> DensityMatrix:
    """Random mixture of `rank` rotation-invariant pure states."""
    n = d_a * d_b
    if not 1 <= rank <= n:
        raise ValueError(f"rank must be in [1, {n}], got {rank}")
    rng = _rng(seed)
    w = rng.random(rank)
    w /= w.sum()
    m = np.zeros((n, n), dtype=complex)
    for k in range(rank):
        psi = random_pure(d_a, d_b, rng).vector
        m += w[k] * np.outer(psi, psi.conj())
    return DensityMatrix(m, (d_a, d_b))


def state_to_json(rho: DensityMatrix) -> str:
    """Serialize to the interchange document
    {"dims": [da, db], "matrix": [[{"re": .., "im": ..}, ..], ..]}."""
    mat = [[{"re": float(z.real), "im": float(z.imag)} for z in row]
           for row in rho.matrix]
    return json.dumps({"dims": list(rho.dims), "matrix": mat})


def state_from_json(text: str) -> DensityMatrix:
    """Parse the interchange document. Schema problems raise ValueError
    mentioning the field; invariant violations surface from DensityMatrix."""
    doc = json.loads(text)
    try:
        dims = doc["dims"]
        rows = doc["matrix"]
        m = np.array([[complex(cell["re"], cell["im"]) for cell in row]
                      for row in rows], dtype=complex)
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed state document: {exc!r}") from exc
    if len(dims) != 2:
        raise ValueError("malformed state document: dims must have 2 entries")
    return DensityMatrix(m, (int(dims[0]), int(dims[1])))


def load_state(path) -> DensityMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return state_from_json(fh.read())


def save_state(rho: DensityMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(state_to_json(rho))
