"""Marked permutations: a permutation together with a chosen subset of its
cyclic bonds, and the (lambda, sigma, r) encoding of one.

A cyclic bond is named by its position i (the pair p_i, p_{i+1} with
p_{n+1} = p_1).  Chosen bonds glue entries into runs; every run is an
interval of values read in increasing or decreasing order, possibly
wrapping from the end of the permutation to its start.

The encoding:

* runs are indexed b_1..b_m by increasing minimum value;
* ``lam[j]`` is the (length, direction) of b_{j+1};
* ``sigma`` lists, location by location, which block sits there once the
  permutation is rotated so that the wrapping run ends at position n;
* ``r`` is how many entries of the last run were wrapped to the front.

>>> d = encode(parse_marked("2/45/6/1/987/3"))
>>> d.lam
((1, None), (2, 'down'), (2, 'up'), (1, None), (3, 'down'))
>>> d.sigma, d.r
((3, 4, 1, 5, 2), 1)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Literal, Optional

from . import oracle
from .perm import Permutation, list_bonds

__all__ = [
    "MarkedPermutation", "MarkedDecomposition", "MarkedTable",
    "parse_marked", "runs", "encode", "decode", "all_markings",
    "marked_table", "marked_table_direct", "binomial_transform",
    "inverse_binomial_transform",
]

Direction = Optional[Literal["up", "down"]]


@dataclass(frozen=True)
class MarkedPermutation:
    base: Permutation
    chosen: frozenset[int]

    def __post_init__(self):
        bonds = {b.position for b in list_bonds(self.base)}
        bad = set(self.chosen) - bonds
        if bad:
            raise ValueError(f"positions {sorted(bad)} are not cyclic bonds of {self.base}")
        n = len(self.base)
        if n >= 2 and len(self.chosen) == n:
            raise ValueError("cannot choose every cyclic position")

    @property
    def n(self) -> int:
        return len(self.base)

    def __str__(self) -> str:
        p = self.base
        n = len(p)
        sep = "" if n < 10 else ","
        out = []
        for i, v in enumerate(p, start=1):
            out.append(str(v))
            if i < n and i not in self.chosen:
                out.append("/")
            elif i < n:
                out.append(sep)
        if n >= 2 and n not in self.chosen and abs(p[-1] - p[0]) == 1:
            out.append("/")
        return "[" + "".join(out) + "]"


def parse_marked(text: str) -> MarkedPermutation:
    """Read a marking such as ``"[2/45/6/1/987/3]"``.

    Neighbouring digits with no slash between them form a chosen bond.  A
    wrap pair (p_n, p_1) that is a bond counts as chosen unless the string
    ends with a slash.  Single digit values only (n <= 9).
    """
    s = text.strip().strip("[]")
    values = []
    cut_after = set()
    for ch in s:
        if ch == "/":
            cut_after.add(len(values))
        else:
            values.append(int(ch))
    p = Permutation(values)
    n = len(p)
    chosen = {i for i in range(1, n) if i not in cut_after}
    if n >= 2 and n not in cut_after and abs(p[-1] - p[0]) == 1:
        chosen.add(n)
    return MarkedPermutation(p, frozenset(chosen))


@dataclass(frozen=True)
class MarkedDecomposition:
    lam: tuple[tuple[int, Direction], ...]
    sigma: tuple[int, ...]
    r: int

    @property
    def m(self) -> int:
        return len(self.lam)

    def render_lambda(self) -> str:
        arrow = {None: "", "up": "↑", "down": "↓"}
        return "(" + ",".join(f"{k}{arrow[d]}" for k, d in self.lam) + ")"


def _break_positions(mp: MarkedPermutation) -> list[int]:
    return [i for i in range(1, mp.n + 1) if i not in mp.chosen]


def runs(mp: MarkedPermutation) -> list[tuple[int, ...]]:
    """The runs in reading order, starting from the run after the wrap.

    The run containing position n comes last; when it wraps, its entries
    are listed from the end of the permutation onward.
    """
    n = mp.n
    if n == 1:
        return [tuple(mp.base)]
    r = 0 if n not in mp.chosen else min(_break_positions(mp))
    q = mp.base[r:] + mp.base[:r]
    out = []
    cur = []
    for j, v in enumerate(q, start=1):
        cur.append(v)
        # position j of q is position j + r of p (cyclically)
        if ((j + r - 1) % n) + 1 not in mp.chosen:
            out.append(tuple(cur))
            cur = []
    assert not cur
    return out


def encode(mp: MarkedPermutation) -> MarkedDecomposition:
    n = mp.n
    r = 0 if n == 1 or n not in mp.chosen else min(_break_positions(mp))
    rs = runs(mp)
    order = sorted(range(len(rs)), key=lambda j: min(rs[j]))
    index_of = {loc: idx + 1 for idx, loc in enumerate(order)}
    lam = []
    for loc in order:
        run = rs[loc]
        if len(run) == 1:
            lam.append((1, None))
        else:
            lam.append((len(run), "up" if run[1] > run[0] else "down"))
    sigma = tuple(index_of[loc] for loc in range(len(rs)))
    return MarkedDecomposition(tuple(lam), sigma, r)


def decode(d: MarkedDecomposition, n: int) -> MarkedPermutation:
    m = d.m
    if m == 0 or sum(k for k, _ in d.lam) != n:
        raise ValueError("run lengths must sum to n")
    for k, direction in d.lam:
        if k < 1:
            raise ValueError("run lengths must be positive")
        if (k == 1) != (direction is None) or direction not in (None, "up", "down"):
            raise ValueError(f"bad direction {direction!r} for a run of length {k}")
    if sorted(d.sigma) != list(range(1, m + 1)):
        raise ValueError("sigma must be a permutation of the block indices")
    last_len = d.lam[d.sigma[-1] - 1][0]
    if not 0 <= d.r < last_len:
        raise ValueError(f"r={d.r} must lie in 0..{last_len - 1}")
    # value intervals in block order
    blocks = []
    lo = 1
    for k, direction in d.lam:
        vals = list(range(lo, lo + k))
        if direction == "down":
            vals.reverse()
        blocks.append(vals)
        lo += k
    q = []
    glued = set()
    for b in d.sigma:
        start = len(q)
        q.extend(blocks[b - 1])
        glued.update(range(start + 1, len(q)))
    r = d.r
    p = q[n - r:] + q[:n - r] if r else q
    chosen = frozenset(((j + r - 1) % n) + 1 for j in glued)
    return MarkedPermutation(Permutation(p), chosen)


def all_markings(p: Permutation) -> Iterator[MarkedPermutation]:
    """Every marking of p (all subsets of its cyclic bonds except the full cycle)."""
    bonds = [b.position for b in list_bonds(p)]
    n = len(p)
    for k in range(len(bonds) + 1):
        for sub in itertools.combinations(bonds, k):
            if n >= 2 and k == n:
                continue
            yield MarkedPermutation(p, frozenset(sub))


@dataclass(frozen=True)
class MarkedTable:
    n: int
    counts: tuple[int, ...]  # counts[k] = f_{n,k}


def binomial_transform(a: tuple[int, ...]) -> tuple[int, ...]:
    """f_k = sum_j C(j, k) a_j."""
    f = [sum(comb(j, k) * a[j] for j in range(k, len(a))) for k in range(len(a))]
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def inverse_binomial_transform(f: tuple[int, ...]) -> tuple[int, ...]:
    """a_k = sum_j (-1)^(j-k) C(j, k) f_j."""
    a = [sum((-1) ** (j - k) * comb(j, k) * f[j] for j in range(k, len(f)))
         for k in range(len(f))]
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def marked_table_direct(n: int, cap: int | None = None) -> MarkedTable:
    """Count (permutation, subset of cyclic bonds) pairs by subset size."""
    oracle._check(n, cap, oracle.CAPS.brute_force, "brute-force")
    counts = [0] * (n + 1)
    for vals in itertools.permutations(range(1, n + 1)):
        bonds = [b.position for b in list_bonds(vals)]
        for k in range(len(bonds) + 1):
            for _ in itertools.combinations(bonds, k):
                counts[k] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return MarkedTable(n, tuple(counts))


def marked_table(n: int, cap: int | None = None) -> MarkedTable:
    """f_{n,k}, computed by direct enumeration and checked against the
    binomial transform of the cyclic-bond distribution."""
    direct = marked_table_direct(n, cap)
    via = binomial_transform(oracle.dist_cbnd(n, cap).counts)
    if direct.counts != via:
        raise AssertionError(f"marked counts disagree at n={n}: {direct.counts} vs {via}")
    return direct
