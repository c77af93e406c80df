"""
Counting SL_n-bundles on the projective line
============================================

Every vector bundle on P^1 splits as a sum of line bundles O(a_i). Summing
1/|Aut| over splitting types with trivial determinant gives the groupoid
mass of SL_n-bundles, which is compared to q^{dim Bun_G} times the product
of zeta values at the degrees.
"""

from bunmass.bung import BunGContext, tamagawa_rhs
from bunmass.oracle import aut_order, sl_mass_p1, splitting_types
from bunmass.rootsys import CartanLabel, invariants
from bunmass.zeta import projective_line

for t in splitting_types(2, 3):
    print(t.a, "|Aut| over F_2 =", aut_order(t, 2))

##############################################################################
# Mass versus prediction

for n, q in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]:
    report = sl_mass_p1(n, q, 20)
    predicted = tamagawa_rhs(BunGContext(invariants(CartanLabel("A", n - 1)), projective_line(q)))
    print(
        f"SL_{n} over F_{q}: predicted {predicted}, enumerated {float(report.partial_mass):.15f}, "
        f"tail <= {float(report.tail_bound):.2e}, agree: {report.verdict}"
    )
