"""
Zeta functions of curves
========================

A curve is described by its Weil numerator. Point counts over every
extension follow from Newton's identities, and Moebius inversion turns them
into counts of closed points.
"""

from bunmass.zeta import (
    closed_points,
    elliptic_from_weierstrass,
    from_numerator,
    point_count,
    projective_line,
    zeta_value,
)

p1 = projective_line(2)
print("P^1/F_2 closed points by degree:", [closed_points(p1, d) for d in range(1, 9)])

##############################################################################
# The supersingular curve y^2 + y = x^3 over F_2 has numerator 1 + 2t^2.
# Its point counts over F_{2^r} oscillate around 2^r + 1.

ss = from_numerator(2, 1, [1, 0, 2])
for r in range(1, 7):
    print(f"N_{r} = {point_count(ss, r):4d}   (2^{r} + 1 = {2**r + 1})")

##############################################################################
# Elliptic curves over prime fields are counted directly.

e = elliptic_from_weierstrass(101, a4=1, a6=7)
print("y^2 = x^3 + x + 7 over F_101:", e.numerator, "N_1 =", point_count(e, 1))

##############################################################################
# Special values at integers s >= 2 are exact rationals.

for s in (2, 3, 4):
    print(f"zeta(P^1/F_2, {s}) = {zeta_value(p1, s)}   zeta(E/F_2, {s}) = {zeta_value(ss, s)}")

##############################################################################
# Invalid numerators are rejected with the failing extension degree.

try:
    from_numerator(2, 1, [1, 5, 2])
except ValueError as exc:
    print("rejected:", exc)
