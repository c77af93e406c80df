"""
Exponents from root heights
===========================

Positive roots are generated from the Cartan matrix, and the exponents are
read off the height distribution: the k-th row of a Young diagram gets one
box per positive root of height k, and the column lengths are the exponents.
"""

from collections import Counter

from bunmass.rootsys import all_labels, build_root_datum, chevalley_order, invariants

datum = build_root_datum("G2")
print("G2 positive roots:", datum.positive_roots)

# heights 1,1,2,3,4,5 -> rows (2,1,1,1,1) -> columns (5,1)
heights = Counter(sum(r) for r in datum.positive_roots)
print("roots per height:", dict(sorted(heights.items())))
print("exponents:", invariants(datum).exponents)

##############################################################################
# The same procedure for every simple type up to rank 8. The degrees multiply
# to the Weyl group order and add up to N + rank.

for label in all_labels(8):
    inv = invariants(label)
    print(f"{label!s:3}  N={inv.num_pos_roots:3}  degrees={inv.degrees}  |W|={inv.weyl_order}")

##############################################################################
# Chevalley group orders over small fields

for q in (2, 3, 4):
    print(f"|SL_3(F_{q})| =", chevalley_order(invariants("A2"), q))
