"""
Cocktail servings in the enveloping algebra
===========================================

Rewriting (e P1)...(e Pn) f^(n+m) v into f-products leaves one term per way
of pouring n ingredients into m glasses.  The coefficients are integers whose
sign is (-1)^n.
"""

from currentweyl import enumerate_servings, martini_check

n, m = 3, 2
print(len(enumerate_servings(m, n)), "servings")
rep = martini_check(m, n)
for serving, c in rep.table.items():
    print(f"{str(serving):12s} {c}")
print("support, integrality and sign:", rep.passed)

# one glass: every ingredient in it
for k in range(1, 6):
    print(k, list(martini_check(1, k).table.values()))
