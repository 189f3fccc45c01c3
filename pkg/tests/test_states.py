import json

import numpy as np
import pytest

from rbnl.linalg import partial_trace, von_neumann_entropy
from rbnl.states import (PAULIS, BlochVector, DensityMatrix, PureState, PVM,
                         bloch_pvm, load_state, qutrit_family, random_density,
                         random_pure, save_state, singlet, state_from_json,
                         state_to_json, werner)


def test_density_matrix_validation():
    good = DensityMatrix(np.eye(4) / 4, (2, 2))
    assert good.dim == 4
    with pytest.raises(ValueError, match="trace"):
        DensityMatrix(np.eye(4) / 2, (2, 2))
    with pytest.raises(ValueError, match="not Hermitian"):
        m = np.eye(4) / 4
        m = m + 0.0j
        m[0, 1] = 0.3
        DensityMatrix(m, (2, 2))
    with pytest.raises(ValueError, match="positive semidefinite"):
        DensityMatrix(np.diag([0.75, 0.75, -0.25, -0.25]), (2, 2))
    with pytest.raises(ValueError):
        DensityMatrix(np.eye(4) / 4, (2, 3))  # dims do not match the shape


def test_density_matrix_is_immutable():
    rho = werner(0.3)
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 9.0


def test_purity():
    assert abs(werner(0.0).purity() - 0.25) < 1e-14
    assert abs(singlet().density().purity() - 1.0) < 1e-14


def test_pure_state_norm_check():
    with pytest.raises(ValueError, match="norm"):
        PureState(np.array([1.0, 1.0, 0.0, 0.0]), (2, 2))


def test_pure_state_density():
    psi = singlet()
    rho = psi.density()
    assert abs(rho.purity() - 1.0) < 1e-14
    # singlet marginals are maximally mixed
    for keep in ("A", "B"):
        red = partial_trace(rho.matrix, (2, 2), keep)
        assert np.allclose(red, np.eye(2) / 2, atol=1e-14)


def test_pvm_validation():
    p0 = np.diag([1.0, 0.0]).astype(complex)
    p1 = np.diag([0.0, 1.0]).astype(complex)
    m = PVM((p0, p1))
    assert m.labels == (0.0, 1.0)
    with pytest.raises(ValueError, match="orthogonal"):
        PVM((p0, p0))
    with pytest.raises(ValueError, match="identity"):
        PVM((p0,))
    with pytest.raises(ValueError, match="idempotent"):
        PVM((np.full((2, 2), 0.5) * 1.3, np.eye(2) - np.full((2, 2), 0.5) * 1.3))
    with pytest.raises(ValueError):
        PVM((p0, p1), labels=(1.0,))


def test_bloch_vector():
    with pytest.raises(ValueError):
        BlochVector(np.array([1.0, 1.0, 0.0]))
    u = BlochVector(np.array([0.0, 0.0, 1.0]))
    assert np.allclose(u.dot_sigma(), PAULIS[2], atol=0.0)
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        op = BlochVector(n).dot_sigma()
        ev = np.sort(np.linalg.eigvalsh(op))
        assert np.allclose(ev, [-1.0, 1.0], atol=1e-12)


def test_bloch_pvm_projects():
    rng = np.random.default_rng(6)
    for _ in range(20):
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        u = BlochVector(n)
        m = bloch_pvm(u)
        plus, minus = m.projectors
        assert m.labels == (1.0, -1.0)
        assert np.allclose(plus, (np.eye(2) + u.dot_sigma()) / 2, atol=1e-14)
        assert np.allclose(plus + minus, np.eye(2), atol=1e-14)
        assert abs(np.trace(plus).real - 1.0) < 1e-13  # rank one


def test_werner_spectrum():
    rng = np.random.default_rng(7)
    for mu in rng.random(20):
        rho = werner(float(mu))
        ev = np.sort(np.linalg.eigvalsh(rho.matrix))
        expected = np.sort(np.r_[np.full(3, (1 - mu) / 4), (1 + 3 * mu) / 4])
        assert np.allclose(ev, expected, atol=1e-13)
    assert np.allclose(werner(0.0).matrix, np.eye(4) / 4, atol=0.0)
    with pytest.raises(ValueError):
        werner(1.5)
    with pytest.raises(ValueError):
        werner(-0.1)


def test_qutrit_family():
    psi = qutrit_family(1.0)
    assert psi.dims == (3, 3)
    red = partial_trace(psi.density().matrix, (3, 3), "A")
    assert np.allclose(red, np.eye(3) / 3, atol=1e-14)
    # vanishing middle weight is allowed
    psi0 = qutrit_family(0.0)
    assert abs(np.linalg.norm(psi0.vector) - 1.0) < 1e-14
    with pytest.raises(ValueError):
        qutrit_family(-0.5)


def test_qutrit_family_entropy_closed_form():
    # weights {4/9, 1/9, 4/9} give S = 2 ln 3 - (16/9) ln 2
    red = partial_trace(qutrit_family(0.5).density().matrix, (3, 3), "A")
    s = von_neumann_entropy(red)
    assert abs(s - (2 * np.log(3) - 16 / 9 * np.log(2))) < 1e-12


def test_random_generators_are_seeded():
    a = random_pure(2, 3, seed=42)
    b = random_pure(2, 3, seed=42)
    assert np.array_equal(a.vector, b.vector)
    c = random_density(2, 2, rank=3, seed=42)
    d = random_density(2, 2, rank=3, seed=42)
    assert np.array_equal(c.matrix, d.matrix)
    assert not np.array_equal(c.matrix, random_density(2, 2, rank=3, seed=43).matrix)


def test_random_density_rank():
    rho = random_density(2, 2, rank=2, seed=0)
    ev = np.sort(np.linalg.eigvalsh(rho.matrix))
    assert np.all(ev[:2] < 1e-12)
    with pytest.raises(ValueError):
        random_density(2, 2, rank=5, seed=0)


def test_json_round_trip():
    rho = werner(0.37)
    doc = state_to_json(rho)
    back = state_from_json(doc)
    assert back.dims == rho.dims
    assert np.array_equal(back.matrix, rho.matrix)
    parsed = json.loads(doc)
    assert parsed["dims"] == [2, 2]
    assert {"re", "im"} == set(parsed["matrix"][0][0])


def test_json_malformed_documents():
    for doc in ('{"dims": [2, 2]}',
                '{"dims": [2], "matrix": []}',
                '{"dims": [2, 2], "matrix": [[1, 2], [3, 4]]}'):
        with pytest.raises(ValueError, match="malformed state document"):
            state_from_json(doc)


def test_save_load_file(tmp_path):
    path = tmp_path / "state.json"
    rho = random_density(2, 2, rank=4, seed=9)
    save_state(rho, path)
    back = load_state(path)
    assert np.allclose(back.matrix, rho.matrix, atol=0.0)
    assert back.dims == rho.dims
