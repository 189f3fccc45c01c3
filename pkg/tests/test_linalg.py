import numpy as np
import pytest

from rbnl.linalg import (entropy_from_eigenvalues, hermitian_spectrum,
                         partial_trace, tensor, von_neumann_entropy)


def random_hermitian(rng, d):
    m = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return (m + m.conj().T) / 2


def random_state(rng, d):
    m = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = m @ m.conj().T
    return rho / np.trace(rho).real


def test_tensor_ordering():
    # first factor is the slow index: basis order |00>, |01>, |10>, |11>
    a = np.array([[1.0, 0.0], [0.0, 0.0]])  # |0><0|
    b = np.array([[0.0, 0.0], [0.0, 1.0]])  # |1><1|
    t = tensor(a, b)
    assert t.shape == (4, 4)
    assert t[1, 1] == 1.0 and np.count_nonzero(t) == 1


def test_tensor_variadic():
    rng = np.random.default_rng(0)
    x, y, z = (random_hermitian(rng, 2) for _ in range(3))
    lhs = tensor(x, y, z)
    rhs = np.kron(np.kron(x, y), z)
    assert np.allclose(lhs, rhs, atol=0.0)


def test_partial_trace_product_state():
    rng = np.random.default_rng(1)
    for d_a, d_b in [(2, 2), (2, 3), (3, 2), (3, 3)]:
        ra = random_state(rng, d_a)
        rb = random_state(rng, d_b)
        rho = tensor(ra, rb)
        assert np.allclose(partial_trace(rho, (d_a, d_b), "A"), ra, atol=1e-13)
        assert np.allclose(partial_trace(rho, (d_a, d_b), "B"), rb, atol=1e-13)


def test_partial_trace_preserves_trace():
    rng = np.random.default_rng(2)
    for _ in range(50):
        rho = random_state(rng, 6)
        for keep in ("A", "B"):
            red = partial_trace(rho, (2, 3), keep)
            assert abs(np.trace(red).real - 1.0) < 1e-12


def test_partial_trace_rejects_bad_keep():
    rho = np.eye(4) / 4
    with pytest.raises(ValueError):
        partial_trace(rho, (2, 2), "C")


def test_hermitian_spectrum_reconstructs():
    rng = np.random.default_rng(3)
    for d in (2, 3, 4, 6):
        m = random_hermitian(rng, d)
        spec = hermitian_spectrum(m)
        assert np.all(np.diff(spec.values) >= -1e-14)  # ascending
        gram = spec.vectors.conj().T @ spec.vectors
        assert np.allclose(gram, np.eye(d), atol=1e-12)
        rebuilt = (spec.vectors * spec.values) @ spec.vectors.conj().T
        assert np.allclose(rebuilt, m, atol=1e-12)


def test_hermitian_spectrum_rejects_nonhermitian():
    m = np.array([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(ValueError, match="not Hermitian"):
        hermitian_spectrum(m)


def test_degenerate_spectrum_is_canonical():
    # fully degenerate: the canonical basis must come back, in order
    spec = hermitian_spectrum(np.eye(3, dtype=complex))
    assert np.allclose(spec.vectors, np.eye(3), atol=1e-12)

    # two-fold degenerate block: same input twice gives bit-identical output
    m = np.diag([1.0, 1.0, 2.0]).astype(complex)
    s1 = hermitian_spectrum(m)
    s2 = hermitian_spectrum(m)
    assert np.array_equal(s1.vectors, s2.vectors)
    assert np.allclose(s1.vectors[:, :2], np.eye(3)[:, :2], atol=1e-12)


def test_spectrum_arrays_are_frozen():
    spec = hermitian_spectrum(np.diag([1.0, 2.0]).astype(complex))
    with pytest.raises(ValueError):
        spec.values[0] = 0.0


def test_entropy_from_eigenvalues():
    assert entropy_from_eigenvalues(np.array([1.0, 0.0])) == 0.0
    d = 5
    assert abs(entropy_from_eigenvalues(np.full(d, 1 / d)) - np.log(d)) < 1e-14
    # tiny negatives from eigensolvers are tolerated, real ones are not
    assert entropy_from_eigenvalues(np.array([1.0, -1e-14])) == 0.0
    with pytest.raises(ValueError, match="not a state"):
        entropy_from_eigenvalues(np.array([1.1, -0.1]))


def test_von_neumann_entropy_matches_eigenvalue_route():
    rng = np.random.default_rng(4)
    for _ in range(25):
        rho = random_state(rng, 4)
        vals = np.linalg.eigvalsh(rho)
        s1 = von_neumann_entropy(rho)
        s2 = entropy_from_eigenvalues(vals)
        assert abs(s1 - s2) < 1e-12


def test_von_neumann_entropy_bounds():
    d = 4
    assert von_neumann_entropy(np.eye(d, dtype=complex) / d) <= np.log(d)
    psi = np.zeros((d, 1), dtype=complex)
    psi[0, 0] = 1.0
    assert von_neumann_entropy(psi @ psi.conj().T) == 0.0
