"""
How many kings survive on the cylinder
======================================

The share of kings that remain kings when the ends are glued grows with n.
"""

from cylkings.recurrences import ratio_table

for row in ratio_table(12):
    print(row.n, row.ratio, row.decimal)
