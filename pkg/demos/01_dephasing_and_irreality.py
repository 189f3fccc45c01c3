"""Unrevealed measurements and how far a state is from definiteness.

Dephasing a state in a local basis models a projective measurement whose
outcome nobody reads. The entropy increase it causes is the irreality of
that observable: zero exactly when the observable already has a definite
value in the state.
"""
import numpy as np

from rbnl import (BlochVector, LocalPVM, RealityComponents, bloch_pvm,
                  dephase, irreality, is_reality_state, make_reality_state,
                  singlet, von_neumann_entropy, werner)

Z = BlochVector(np.array([0.0, 0.0, 1.0]))
X = BlochVector(np.array([1.0, 0.0, 0.0]))


def main():
    rho = werner(0.8)
    mz = LocalPVM(bloch_pvm(Z), "A")

    print("Werner state, mu = 0.8")
    print(f"  S(rho)            = {von_neumann_entropy(rho.matrix):.6f} nats")
    dz = dephase(rho, mz)
    print(f"  S(Phi_Az(rho))    = {von_neumann_entropy(dz.matrix):.6f} nats")
    print(f"  irreality of Z_A  = {irreality(mz, rho):.6f} nats")
    print(f"  dephasing twice changes nothing: "
          f"{np.max(np.abs(dephase(dz, mz).matrix - dz.matrix)):.1e}")
    print()

    psi = singlet().density()
    print("singlet: every spin direction is maximally indefinite")
    for name, u in (("Z", Z), ("X", X)):
        m = LocalPVM(bloch_pvm(u), "A")
        print(f"  irreality of {name}_A = {irreality(m, psi):.6f}  (ln 2 = {np.log(2):.6f})")
    print()

    # a state assembled from definite-Z components has zero Z irreality
    rng = np.random.default_rng(1)
    w = rng.random(3)
    w /= w.sum()
    locals_a = []
    locals_b = []
    for _ in range(3):
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        v /= np.linalg.norm(v)
        locals_a.append(np.outer(v, v.conj()))
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        v /= np.linalg.norm(v)
        locals_b.append(np.outer(v, v.conj()))
    comps = RealityComponents(tuple(w), tuple(locals_a), tuple(locals_b))
    reality = make_reality_state(comps, bloch_pvm(Z))
    print("reality state built from Z-definite components:")
    print(f"  is_reality_state  = {is_reality_state(reality, mz)}")
    print(f"  irreality of Z_A  = {irreality(mz, reality):.2e}")


if __name__ == "__main__":
    main()
