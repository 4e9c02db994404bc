"""
Bond polynomials and their recursions
=====================================

The bond polynomial of order n counts permutations by their number of
adjacent consecutive pairs.  Cyclic and linear versions determine each
other.
"""

from cylkings import recurrences as rec

B = rec.bond_polys(7)
CB = rec.cyclic_bond_polys(8)
print("linear  ", B[5].render())
print("cyclic  ", CB[5].render())

# cyclic from linear
print(rec.cb_from_b(B[:8]) == CB[8])

# and back again; every division here is exact
print(rec.b_from_cb(6, CB[6]) == B[6])

# the cyclic polynomials also satisfy a recursion of their own
print(rec.cb_self_recursion(CB[:8]) == CB[8])
