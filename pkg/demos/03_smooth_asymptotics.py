"""How well the closed-form smooth densities track the exact counts.

The multiset count of n into parts m**s grows like
exp(kappa_s (s+1) n^(1/(1+s))); distinct counting swaps the zeta constant
for its alternating cousin.  This demo prints the relative error of the
closed forms against exact tables, including the -1/24 energy shift that
upgrades the s=1 multiset formula to the first term of the convergent
series for p(n).

Run: python demos/03_smooth_asymptotics.py
"""

from partition_dos import (
    BOSE,
    FERMI,
    SpectrumSpec,
    build_table,
    make_model,
    rho_unrestricted,
)

n_max = 1000
p_table = build_table(SpectrumSpec(1), n_max)
d_table = build_table(SpectrumSpec(1, distinct=True), n_max)

plain = make_model(1, BOSE)
shifted = make_model(1, BOSE, rademacher_shift=True)
distinct = make_model(1, FERMI)

print(f"{'n':>6} {'p(n) err':>10} {'with shift':>11} {'d(n) err':>10}")
for n in (10, 50, 100, 300, 600, 1000):
    e_plain = rho_unrestricted(plain, n) / p_table[n] - 1
    e_shift = rho_unrestricted(shifted, n) / p_table[n] - 1
    e_dist = rho_unrestricted(distinct, n) / d_table[n] - 1
    print(f"{n:>6} {e_plain:>10.3%} {e_shift:>11.3%} {e_dist:>10.3%}")

m = make_model(2, BOSE)
print(f"\nconstants for squares (s=2): C={m.C:.6f} D={m.D:.6f} "
      f"kappa={m.kappa:.6f} lambda={m.lam:.6f}")

sq = build_table(SpectrumSpec(2), 1000)
m2 = make_model(2, BOSE)
print("\nsquares, exact vs smooth:")
for n in (100, 500, 1000):
    print(f"  p2({n}) = {sq[n]:>12}  smooth = {rho_unrestricted(m2, n):14.1f}"
          f"  err = {rho_unrestricted(m2, n)/sq[n]-1:+.2%}")
