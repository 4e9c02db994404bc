import itertools
import math

import pytest

from cylkings import oracle
from cylkings.oracle import (
    CapError, cb1, count_cyl_kings, count_kings, count_table, dist_bnd,
    dist_cbnd, enumerate_A, enumerate_kings,
)
from cylkings.perm import Permutation, bnd, cbnd, is_king, rotate


def test_dist_examples():
    assert dist_cbnd(2).counts == (0, 0, 2)
    assert dist_cbnd(3).counts == (0, 0, 6, 0)
    assert dist_bnd(3).counts == (0, 4, 2, 0)
    assert dist_cbnd(4).counts == (0, 8, 8, 8, 0)
    assert dist_bnd(1).counts == (1, 0) and dist_cbnd(1).counts == (1, 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_dist_totals(n):
    assert dist_bnd(n).total() == dist_cbnd(n).total() == math.factorial(n)


def test_caps():
    with pytest.raises(CapError):
        dist_cbnd(11)
    with pytest.raises(CapError):
        count_kings(14)
    with pytest.raises(CapError):
        enumerate_kings(14)
    with pytest.raises(CapError):
        cb1(11)
    assert dist_cbnd(3, cap=3).counts[2] == 6


def test_counts_examples():
    assert count_cyl_kings(5) == 10
    assert count_cyl_kings(9) == 36954
    assert count_kings(4) == 2
    assert [count_cyl_kings(n) for n in range(1, 10)] == [1, 0, 0, 0, 10, 60, 462, 3920, 36954]


def test_cyl_kings_listing_n5():
    listed = {"31425", "14253", "42531", "25314", "53142",
              "24135", "41352", "13524", "35241", "52413"}
    got = {"".join(map(str, p)) for p in oracle.enumerate_cyl_kings(5)}
    assert got == listed


@pytest.mark.parametrize("n", range(1, 11))
def test_engines_agree(n):
    assert dist_bnd(n).counts[0] == count_kings(n)
    assert dist_cbnd(n).counts[0] == count_cyl_kings(n)


def test_threads_deterministic():
    assert count_kings(9, threads=2) == count_kings(9) == 47622
    assert count_cyl_kings(9, threads=3) == 36954


def test_enumerate_A():
    assert list(enumerate_A(4)) == [Permutation([2, 4, 1, 3]), Permutation([3, 1, 4, 2])]
    assert list(enumerate_A(3)) == []
    assert len(list(enumerate_A(5))) == 4


def test_enumerate_kings_is_literal_filter():
    for n in range(1, 8):
        brute = [p for p in itertools.permutations(range(1, n + 1)) if is_king(p)]
        assert [tuple(p) for p in enumerate_kings(n)] == brute


def test_cb1():
    assert cb1(4) == 8
    assert cb1(3) == 0
    assert cb1(5) == 20


def test_count_table():
    rows = {r.n: r for r in count_table(6)}
    r5 = rows[5]
    assert (r5.kings, r5.cyl_kings, r5.a_n, r5.cb1) == (14, 10, 4, 20)
    r1 = rows[1]
    assert (r1.kings, r1.cyl_kings, r1.a_n, r1.cb1) == (1, 1, 0, 0)
    assert rows[6].cyl_kings == 60
    for r in rows.values():
        assert r.a_n == r.kings - r.cyl_kings >= 0
    assert count_table(11, count_cap=13)[-1].cb1 is None


@pytest.mark.parametrize("n", range(2, 9))
def test_rotation_orbits(n):
    seen = set()
    for vals in itertools.permutations(range(1, n + 1)):
        if vals in seen:
            continue
        orbit = {rotate(Permutation(vals), i) for i in range(n)}
        seen |= {tuple(p) for p in orbit}
        assert len({cbnd(p) for p in orbit}) == 1


@pytest.mark.parametrize("m", range(3, 10))
def test_last_entry_reduction(m):
    # a_{m,k} = m * #{p in S_m : cbnd(p) = k, p_m = m}
    restricted = [0] * (m + 1)
    for p in itertools.permutations(range(1, m + 1)):
        if p[-1] == m:
            restricted[cbnd(p)] += 1
    assert dist_cbnd(m).counts == tuple(m * c for c in restricted)


@pytest.mark.parametrize("m", range(3, 9))
def test_cbnd_from_prefix(m):
    n = m - 1
    for p in itertools.permutations(range(1, m + 1)):
        if p[-1] != m:
            continue
        prefix = p[:-1]
        extra = 1 if prefix[-1] == n or prefix[0] == n else 0
        assert cbnd(p) == bnd(prefix) + extra


def test_deterministic_tables():
    assert count_table(7) == count_table(7)
