"""
Catalan numbers from a coinvariant quotient
===========================================

The local Weyl module at the origin of C^2 for sl_2 has weight spaces cut out
of the diagonal coinvariants.  Their dimensions are Narayana numbers and the
totals are Catalan numbers.  Three unrelated computations give the same table.
"""

from currentweyl import (catalan, narayana, origin_weyl_character, parking_weight_character,
                         raney_weight_census)

# weight spaces by linear algebra in the coinvariant quotient
for n in range(5):
    ch = origin_weyl_character(n, 2, 1)
    row = [ch[(n - i, i)] for i in range(n + 1)]
    print(f"n={n}  weights {row}  total {ch.total}  catalan {catalan(n)}")

# the Narayana formula, for comparison
print([[narayana(n, i) for i in range(n + 1)] for n in range(5)])

# sl_3: the same three routes, keyed by compositions (i0, i1, i2)
n, r = 3, 2
coinv = origin_weyl_character(n, 2, r).entries
raney = raney_weight_census(n, r)
frob = parking_weight_character(n, r)
print("coinvariants == Raney census == Frobenius chain:", coinv == raney == frob)
print("total", sum(coinv.values()))
