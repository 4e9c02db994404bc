"""Enumeration engines: a literal brute-force filter over S_n and a pruned
depth-first counter.

The brute-force engine is the ground truth for everything else and is
deliberately unoptimized.  The depth-first engine places values one at a
time, rejecting any value adjacent (in value) to the previous one, and
memoizes on (set of used values, last value).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .perm import Permutation, bnd, cbnd
from .poly import IntPoly

__all__ = [
    "CapError", "Caps", "CAPS", "DistTable", "CountRow",
    "dist_bnd", "dist_cbnd", "dist_filtered", "count_kings", "count_cyl_kings",
    "enumerate_kings", "enumerate_A", "enumerate_cyl_kings", "cb1",
    "count_table",
]


class CapError(ValueError):
    """Requested order exceeds a configured cap."""


@dataclass
class Caps:
    brute_force: int = 10
    backtracking: int = 13
    series_order: int = 12


CAPS = Caps()


def _check(n: int, cap: int | None, default: int, what: str) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    limit = default if cap is None else cap
    if n > limit:
        raise CapError(f"n={n} exceeds the {what} cap of {limit}")


@dataclass(frozen=True)
class DistTable:
    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise ValueError("negative count")

    def as_poly(self) -> IntPoly:
        return IntPoly(self.counts)

    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class CountRow:
    n: int
    kings: int
    cyl_kings: int
    a_n: int
    cb1: int | None


@lru_cache(maxsize=None)
def _brute_tables(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    by_bnd = [0] * (n + 1)
    by_cbnd = [0] * (n + 1)
    for p in itertools.permutations(range(1, n + 1)):
        by_bnd[bnd(p)] += 1
        by_cbnd[cbnd(p)] += 1
    return tuple(by_bnd), tuple(by_cbnd)


def dist_bnd(n: int, cap: int | None = None) -> DistTable:
    _check(n, cap, CAPS.brute_force, "brute-force")
    return DistTable(n, _brute_tables(n)[0])


def dist_cbnd(n: int, cap: int | None = None) -> DistTable:
    _check(n, cap, CAPS.brute_force, "brute-force")
    return DistTable(n, _brute_tables(n)[1])


def dist_filtered(n: int, stat: Callable[[tuple], int],
                  keep: Callable[[tuple], bool],
                  cap: int | None = None) -> IntPoly:
    """Sum of t^stat(p) over the p in S_n for which keep(p) holds."""
    _check(n, cap, CAPS.brute_force, "brute-force")
    counts = [0] * (n + 1)
    for p in itertools.permutations(range(1, n + 1)):
        if keep(p):
            counts[stat(p)] += 1
    return IntPoly(counts)


def cb1(n: int, cap: int | None = None) -> int:
    """Number of permutations in S_n with exactly one cyclic bond."""
    return dist_cbnd(n, cap).counts[1] if n >= 1 else 0


# pruned depth-first counting

def _count_from(n: int, first: int, cylindrical: bool) -> int:
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def go(used: int, last: int) -> int:
        if used == full:
            if cylindrical and n > 1 and abs(last - first) == 1:
                return 0
            return 1
        total = 0
        for v in range(n):
            if not used >> v & 1 and abs(v - last) != 1:
                if cylindrical and used | 1 << v == full and abs(v - first) == 1:
                    continue
                total += go(used | 1 << v, v)
        return total

    return go(1 << first, first)


def _count(n: int, cylindrical: bool, threads: int) -> int:
    firsts = range(n)
    if threads > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(_count_from, [n] * n, firsts, [cylindrical] * n))
    else:
        parts = [_count_from(n, f, cylindrical) for f in firsts]
    return sum(parts)


def count_kings(n: int, cap: int | None = None, threads: int = 1) -> int:
    _check(n, cap, CAPS.backtracking, "backtracking")
    return _count(n, False, threads)


def count_cyl_kings(n: int, cap: int | None = None, threads: int = 1) -> int:
    _check(n, cap, CAPS.backtracking, "backtracking")
    if n == 2:
        # the wrap pair of S_2 is the same adjacency as the regular one
        return 0
    return _count(n, True, threads)


def enumerate_kings(n: int, cap: int | None = None) -> Iterator[Permutation]:
    """Kings of order n in lexicographic order."""
    _check(n, cap, CAPS.backtracking, "backtracking")
    prefix: list[int] = []
    used = [False] * (n + 2)

    def rec() -> Iterator[Permutation]:
        if len(prefix) == n:
            yield Permutation(prefix)
            return
        for v in range(1, n + 1):
            if used[v] or (prefix and abs(prefix[-1] - v) == 1):
                continue
            used[v] = True
            prefix.append(v)
            yield from rec()
            prefix.pop()
            used[v] = False

    return rec()


def enumerate_A(n: int, cap: int | None = None) -> Iterator[Permutation]:
    """Kings whose wrap pair is an edge bond."""
    for p in enumerate_kings(n, cap):
        if n >= 2 and abs(p[0] - p[-1]) == 1:
            yield p


def enumerate_cyl_kings(n: int, cap: int | None = None) -> Iterator[Permutation]:
    for p in enumerate_kings(n, cap):
        if n == 1 or (n > 2 and abs(p[0] - p[-1]) != 1):
            yield p


def count_table(max_n: int, brute_cap: int | None = None,
                count_cap: int | None = None,
                threads: int = 1) -> list[CountRow]:
    """Kings, cylindrical kings, their difference and |CB_{1,n}| for n = 1..max_n.

    cb1 comes from the brute-force engine only; rows above its cap carry None.
    """
    limit = CAPS.brute_force if brute_cap is None else brute_cap
    rows = []
    for n in range(1, max_n + 1):
        k = count_kings(n, count_cap, threads)
        ck = count_cyl_kings(n, count_cap, threads)
        c1 = cb1(n, brute_cap) if n <= limit else None
        rows.append(CountRow(n, k, ck, k - ck, c1))
    return rows

