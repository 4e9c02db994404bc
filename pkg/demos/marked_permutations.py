"""
Marked permutations
===================

Choosing a subset of the cyclic bonds splits a permutation into runs.  Each
marked permutation is encoded by run lengths with directions, a block order
and a rotation.
"""

from cylkings.marked import decode, encode, marked_table, parse_marked

mp = parse_marked("[2/45/6/1/987/3]")
d = encode(mp)
print(d.render_lambda(), d.sigma, d.r)
print(decode(d, 9) == mp)

# marked counts are a binomial transform of the cyclic bond counts
print(marked_table(6).counts)
