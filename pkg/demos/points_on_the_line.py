"""
Local Weyl modules at points of the line
========================================

For d = 1 the module at a point multiset Z is a quotient of S^n(A (x) V).
Its character only depends on how many points sit at each location, and it
factors as a product over the distinct points.
"""

from fractions import Fraction

from currentweyl import points_weyl_character, truncation_stability_check, verify_tensor_factorization

# two points together, and two points apart: same character
print(points_weyl_character([0, 0], 1).entries)
print(points_weyl_character([0, Fraction(1, 2)], 1).entries)

# three points for sl_3, grouped as {0, 0} and {5}
rep = verify_tensor_factorization([0, 0, 5], 2)
print("whole:", rep.whole.total, " factors:", [f.total for f in rep.factors], " passed:", rep.passed)

# the truncation order N = n is already stable
print("stable from N=3 to N=4:", truncation_stability_check([0, 0, 5], 2, 3))

# an independent computation with power sums in the monomial basis of A
ch = points_weyl_character([0, 0, 5], 2, route="power-sum-monomial")
print("routes agree:", ch == rep.whole)
