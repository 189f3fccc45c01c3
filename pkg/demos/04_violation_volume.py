"""How often do random measurement settings violate the CHSH bound?

Three independent routes to the same fraction: a closed form, a
deterministic midpoint quadrature, and seeded Monte Carlo in two sampling
parametrizations (random Bloch directions vs the reduced 3-variable box).
Below mu = 1/sqrt(2) there is no violation at all, and the maximal CHSH
excess nmax shows the same threshold.
"""
import math

from rbnl import (McConfig, nmax_werner, nvol_mc, nvol_quadrature,
                  nvol_werner_analytic)

MUS = (0.5, 0.7, 0.75, 0.8, 0.9, 1.0)


def main():
    print(f"  {'mu':>4}  {'analytic':>10}  {'quadrature':>10}  "
          f"{'mc angles':>10}  {'mc xyz':>10}  {'nmax':>8}")
    for mu in MUS:
        analytic = nvol_werner_analytic(mu)
        quad = nvol_quadrature(mu, resolution=400)
        mc_a = nvol_mc(mu, McConfig(n=400_000, seed=2, method="angles")).fraction
        mc_x = nvol_mc(mu, McConfig(n=400_000, seed=2, method="xyz")).fraction
        print(f"  {mu:>4.2f}  {analytic:>10.6f}  {quad:>10.6f}  "
              f"{mc_a:>10.6f}  {mc_x:>10.6f}  {nmax_werner(mu):>8.5f}")
    print()
    print(f"threshold mu = 1/sqrt(2) = {1 / math.sqrt(2):.6f}; at mu = 1 the")
    print(f"violating fraction is (pi - 3)/2 = {(math.pi - 3) / 2:.6f}")


if __name__ == "__main__":
    main()
