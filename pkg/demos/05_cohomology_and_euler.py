"""
Cohomology of Bun_G and the Euler product
=========================================

The Poincare series of Bun_G depends only on the degrees and the genus.
Weighting each class by its Frobenius eigenvalue and summing with signs
converges to the same number as the product of local factors over closed
points.
"""

from bunmass.bung import (
    BunGContext,
    alternating_partial_sums,
    bigraded_trace,
    euler_product_partial,
    poincare_series,
    trace_total,
)
from bunmass.rootsys import invariants
from bunmass.zeta import projective_line

print("A1, genus 0:", [int(c) for c in poincare_series(invariants("A1"), 0, 12)])
print("A1, genus 1:", [int(c) for c in poincare_series(invariants("A1"), 1, 12)])

##############################################################################
# Alternating sums of traces

ctx = BunGContext(invariants("A1"), projective_line(2))
sums = alternating_partial_sums(bigraded_trace(ctx, 40))
for K in (0, 4, 10, 20, 40):
    print(f"S_{K} = {float(sums[K]):.10f}")
print("limit:", trace_total(ctx), "=", float(trace_total(ctx)))

##############################################################################
# Partial Euler products with their rigorous tail bounds

for D in (1, 2, 4, 8, 12):
    e = euler_product_partial(ctx, D)
    print(f"D={D:2d}  product={float(e.value):.10f}  log-tail <= {float(e.tail_bound):.2e}")
