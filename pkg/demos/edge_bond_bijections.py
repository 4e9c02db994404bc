"""
Kings with an edge bond
=======================

Kings whose first and last values differ by one split into four classes.
Each class maps onto a smaller family, which yields a linear recursion.
"""

from cylkings import bijections
from cylkings.perm import make_permutation

p = make_permutation("426153")
print(bijections.classify_A(p), bijections.f0(p))

q = make_permutation("53142")
print(bijections.f3_preimages(q))

for n in range(5, 9):
    a = bijections.audit(n)
    print(n, a.sizes, "ok" if a.ok else a.failures)
