"""Permutations in one-line notation, bond statistics and the
delete/insert primitives used by the bijections.

Positions passed to the functions here are 1-based.  A `Permutation` is a
tuple subclass, so ordinary Python indexing on it is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

__all__ = [
    "Permutation", "BondRecord", "make_permutation",
    "bnd", "cbnd", "list_bonds", "is_king", "is_cyl_king",
    "rotate", "delete_standardize", "insert_value",
]


class Permutation(tuple):
    """A permutation of 1..n in one-line notation (immutable, validated)."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int]) -> "Permutation":
        vals = tuple(values)
        n = len(vals)
        if n == 0:
            raise ValueError("a permutation needs at least one entry")
        seen = set()
        for v in vals:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"entries must be integers, got {v!r}")
            if not 1 <= v <= n:
                raise ValueError(f"value {v} outside 1..{n}")
            if v in seen:
                raise ValueError(f"duplicate value {v}")
            seen.add(v)
        return super().__new__(cls, vals)

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        if len(self) < 10:
            return "[" + "".join(map(str, self)) + "]"
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self) -> str:
        return f"Permutation({list(self)!r})"


def make_permutation(values: Iterable[int] | str) -> Permutation:
    """Build a validated permutation.

    A string such as ``"3142"`` or ``"[3142]"`` is read digit by digit
    (only usable for n <= 9); comma separated strings are also accepted.
    """
    if isinstance(values, str):
        s = values.strip().strip("[]")
        if "," in s:
            values = [int(x) for x in s.split(",")]
        else:
            values = [int(ch) for ch in s]
    return Permutation(values)


@dataclass(frozen=True)
class BondRecord:
    position: int
    kind: Literal["regular", "edge"]


def bnd(p: Sequence[int]) -> int:
    """Number of regular bonds: adjacent entries with consecutive values."""
    return sum(1 for a, b in zip(p, p[1:]) if a - b in (1, -1))


def cbnd(p: Sequence[int]) -> int:
    """Number of cyclic bonds.

    The wrap pair (p_n, p_1) is counted as well.  For n = 2 both cyclic
    positions are counted, so every element of S_2 has two cyclic bonds.
    """
    n = len(p)
    if n < 2:
        return 0
    c = bnd(p)
    if p[-1] - p[0] in (1, -1):
        c += 1
    return c


def list_bonds(p: Sequence[int]) -> list[BondRecord]:
    n = len(p)
    if n < 2:
        return []
    out = [BondRecord(i + 1, "regular")
           for i in range(n - 1) if p[i] - p[i + 1] in (1, -1)]
    if p[-1] - p[0] in (1, -1):
        out.append(BondRecord(n, "edge"))
    return out


def is_king(p: Sequence[int]) -> bool:
    return all(abs(a - b) > 1 for a, b in zip(p, p[1:]))


def is_cyl_king(p: Sequence[int]) -> bool:
    return cbnd(p) == 0


def rotate(p: Permutation, i: int) -> Permutation:
    """Left cyclic shift of the one-line notation by ``i`` places."""
    n = len(p)
    if not 0 <= i < n:
        raise ValueError(f"rotation {i} outside 0..{n - 1}")
    return Permutation(p[i:] + p[:i])


def delete_standardize(p: Permutation, position: int) -> Permutation:
    """Remove the entry at ``position`` and relabel so the rest is in S_{n-1}."""
    n = len(p)
    if n < 2:
        raise ValueError("cannot delete from a permutation of length 1")
    if not 1 <= position <= n:
        raise ValueError(f"position {position} outside 1..{n}")
    v = p[position - 1]
    rest = p[:position - 1] + p[position:]
    return Permutation(x - 1 if x > v else x for x in rest)


def insert_value(p: Permutation, position: int, v: int) -> Permutation:
    """Shift every value >= v up by one, then insert v at ``position``.

    Inverse of :func:`delete_standardize`.
    """
    n = len(p)
    if not 1 <= position <= n + 1:
        raise ValueError(f"position {position} outside 1..{n + 1}")
    if not 1 <= v <= n + 1:
        raise ValueError(f"value {v} outside 1..{n + 1}")
    shifted = [x + 1 if x >= v else x for x in p]
    shifted.insert(position - 1, v)
    return Permutation(shifted)
