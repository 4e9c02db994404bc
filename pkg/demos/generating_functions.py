"""
Series expansions
=================

Expand the marked-bond series, shift it to the cyclic-bond series and read
off cylindrical king counts at u = 0.
"""

from cylkings import series

H = series.series_H(8)
for n, c in enumerate(series.coefficient_table(H)):
    print(f"z^{n}:", c)

print(series.series_CK(12))

# the form with a squared numerator goes wrong straight away
print(series.series_CK_printed(6, 2))
