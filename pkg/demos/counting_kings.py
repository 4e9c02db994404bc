"""
Counting king permutations
==========================

A king permutation never puts two consecutive values next to each other.
On the cylinder the first and last entries are neighbours as well.
"""

from cylkings.oracle import count_cyl_kings, count_kings, enumerate_cyl_kings

# all ten cylindrical kings of order 5
for p in enumerate_cyl_kings(5):
    print(p)

# counts grow quickly; the backtracking counter reaches n = 13
for n in range(1, 12):
    print(n, count_kings(n), count_cyl_kings(n))
