"""Sudden death vs asymptotic decay under exponential noise.

With mu(t) = exp(-t), both Bell quantifiers hit exact zero at
t = ln(sqrt(2)) ~ 0.347 and stay there. The entropic quantifier never
reaches zero at finite time: remote measurements keep having some effect
on local realism long after CHSH violations are gone.
"""
import math

from rbnl import nmax_werner, nrb_werner_closed_form, nvol_werner_analytic


def main():
    rb1 = nrb_werner_closed_form(1.0)
    vol1 = nvol_werner_analytic(1.0)
    max1 = nmax_werner(1.0)
    print(f"  {'t':>5}  {'mu':>7}  {'norm_rb':>10}  {'norm_vol':>10}  {'norm_max':>10}")
    for t in (0.0, 0.1, 0.2, 0.3, 0.347, 0.5, 1.0, 2.0, 4.0):
        mu = math.exp(-t)
        rb = nrb_werner_closed_form(mu) / rb1
        vol = nvol_werner_analytic(mu) / vol1
        mx = nmax_werner(mu) / max1
        print(f"  {t:>5.3f}  {mu:>7.4f}  {rb:>10.6f}  {vol:>10.6f}  {mx:>10.6f}")
    print()
    t_death = math.log(math.sqrt(2.0))
    print(f"Bell quantifiers die at t = ln(sqrt(2)) = {t_death:.6f}")
    print(f"entropic quantifier at that instant: "
          f"{nrb_werner_closed_form(math.exp(-t_death)) / rb1:.6f} of its peak")


if __name__ == "__main__":
    main()
