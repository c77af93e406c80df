"""
Two expansions of the same trace series
=======================================

The trace of Frob^{-1} on Sym^n of the cohomology of the curve with
coefficients in the exponent sheaf can be expanded in two ways: as a product
of rational functions built from the zeta numerator, or as an Euler product
over closed points. Both are computed here as exact truncated series and
compared coefficient by coefficient.
"""

from bunmass.bung import BunGContext, ser1, ser2, series_identity_check, ser1_value, trace_total
from bunmass.rootsys import invariants
from bunmass.zeta import from_numerator, projective_line

ctx = BunGContext(invariants("G2"), projective_line(2))
a = ser1(ctx, 8)
b = ser2(ctx, 8)
for k in range(9):
    print(f"t^{k}: {a[k]!s:>24}  {b[k]!s:>24}")

##############################################################################
# Checking further out, including a genus-one curve

for label, curve in [("A1", projective_line(2)), ("A2", projective_line(3)),
                     ("A1", from_numerator(2, 1, [1, 0, 2]))]:
    c = BunGContext(invariants(label), curve)
    print(label, curve, series_identity_check(c, 20).describe())

##############################################################################
# The closed rational form evaluated at t = 1 is the product of zeta values.

print("value at t=1:", ser1_value(ctx, 1), "=", trace_total(ctx))
