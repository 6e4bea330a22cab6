"""
Weight dimensions in three variables
====================================

For d = 3 no closed form is proven.  We compute the sl_2 weight dimensions
and set them beside a conjectured product formula.
"""

from currentweyl import hoggatt_conjecture_dim, origin_weyl_character

d = 3
for n in (1, 2, 3, 4):
    ch = origin_weyl_character(n, d, 1)
    computed = [ch[(n - i, i)] for i in range(n + 1)]
    formula = [hoggatt_conjecture_dim(n, i, d) for i in range(n + 1)]
    print(f"n={n}  computed {computed}  formula {formula}  {'match' if computed == formula else 'mismatch'}")
