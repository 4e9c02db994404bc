"""Exact enumeration of king and cylindrical-king permutations, their bond
and cyclic-bond distributions, and checks of the identities between them."""

from .perm import (
    Permutation, make_permutation, bnd, cbnd, list_bonds, is_king,
    is_cyl_king, rotate, delete_standardize, insert_value,
)
from .poly import IntPoly, DivisibilityError
from .oracle import (
    CapError, CAPS, dist_bnd, dist_cbnd, count_kings, count_cyl_kings,
    enumerate_kings, enumerate_A, cb1, count_table,
)

__version__ = "0.1.0"
