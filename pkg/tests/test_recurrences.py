from fractions import Fraction

import pytest

from cylkings import oracle
from cylkings import recurrences as rec
from cylkings.poly import DivisibilityError, IntPoly, eval_at_one, eval_at_zero
from math import factorial

t = IntPoly([0, 1])


@pytest.fixture(scope="module")
def B():
    return rec.bond_polys(10)


@pytest.fixture(scope="module")
def CB():
    return rec.cyclic_bond_polys(10)


@pytest.fixture(scope="module")
def counts():
    K = [1] + [oracle.count_kings(n) for n in range(1, 14)]
    CK = [1] + [oracle.count_cyl_kings(n) for n in range(1, 14)]
    CB1 = [0] + [oracle.cb1(n) for n in range(1, 11)]
    return K, CK, CB1


def test_base_polynomials(B, CB):
    assert B[1] == CB[1] == IntPoly([1])
    assert B[2] == 2 * t
    assert CB[2] == 2 * t ** 2
    assert B[3] == 2 * t ** 2 + 4 * t
    assert CB[3] == 6 * t ** 2


def test_intermediates_examples(B):
    i2 = rec.intermediates(2, B)
    assert i2.b1 == i2.b2 == t
    assert i2.x == 2 * t
    assert rec.intermediates(3, B).cz == 2 * t ** 2


@pytest.mark.parametrize("n", range(1, 10))
def test_intermediates_vs_filtered_brute_force(B, CB, n):
    i = rec.intermediates(n, B)
    b1, b2 = rec.filtered_b1(n), rec.filtered_b2(n)
    assert i.b1 == b1 and i.b2 == b2
    assert i.x == b1 + b2
    assert i.cz == rec.filtered_cz(n)
    if n >= 2:
        assert eval_at_one(i.b1) == eval_at_one(i.b2) == factorial(n - 1)
        # CB_n = n * CZ_n
        assert CB[n] == n * i.cz


def test_cb_from_b_examples(B):
    assert rec.cb_from_b(B[:3]) == 6 * t ** 2
    assert rec.cb_from_b(B[:4]) == 8 * t ** 3 + 8 * t ** 2 + 8 * t
    assert eval_at_zero(rec.cb_from_b(B[:5])) == 10


@pytest.mark.parametrize("n", range(2, 10))
def test_cb_from_b_matches_brute_force(B, CB, n):
    assert rec.cb_from_b(B[:n + 1]) == CB[n + 1]


def test_b_from_cb_examples():
    assert rec.b_from_cb(3, 6 * t ** 2) == 2 * t ** 2 + 4 * t
    assert rec.b_from_cb(2, 2 * t ** 2) == 2 * t
    assert rec.b_from_cb(4, 8 * t ** 3 + 8 * t ** 2 + 8 * t) == 2 * t ** 3 + 10 * t ** 2 + 10 * t + 2
    with pytest.raises(DivisibilityError):
        rec.b_from_cb(3, t ** 2)


@pytest.mark.parametrize("n", range(1, 11))
def test_b_from_cb_matches_brute_force(B, CB, n):
    assert rec.b_from_cb(n, CB[n]) == B[n]


def test_cb_self_recursion_examples(CB):
    assert rec.cb_self_recursion(CB[:3]) == 6 * t ** 2
    assert eval_at_zero(rec.cb_self_recursion(CB[:6])) == 60


@pytest.mark.parametrize("n", range(2, 10))
def test_cb_self_recursion_two_routes(CB, n):
    got = rec.cb_self_recursion(CB[:n + 1])
    assert got == CB[n + 1]
    Bs = [IntPoly([1])] + [rec.b_from_cb(j, CB[j]) for j in range(1, n + 1)]
    assert got == rec.cb_from_b(Bs)


def test_single_factor_self_recursion(CB):
    assert rec.cb_self_recursion_printed(CB[:3]) == CB[3]
    with pytest.raises(DivisibilityError):
        rec.cb_self_recursion_printed(CB[:4])
    assert rec.cb_self_recursion_printed(CB[:5]) != CB[5]


def test_ck_from_k(counts):
    K, CK, _ = counts
    assert rec.ck_from_k([1, 1, 0, 0, 2]) == 10
    assert rec.ck_from_k([1, 1, 0, 0, 2, 14]) == 60
    assert rec.ck_from_k(K[:9]) == 36954
    for m in range(3, 14):
        assert rec.ck_from_k(K[:m]) == CK[m]


def test_k_from_ck_cb1(counts):
    K, CK, CB1 = counts
    assert rec.k_from_ck_cb1(5, 10, 20) == 14
    assert rec.k_from_ck_cb1(4, 0, 8) == 2
    assert rec.k_from_ck_cb1(1, 1, 0) == 1
    for n in range(1, 11):
        assert rec.k_from_ck_cb1(n, CK[n], CB1[n]) == K[n]
    with pytest.raises(DivisibilityError):
        rec.k_from_ck_cb1(3, 0, 1)


def test_ck_self_recursion(counts):
    _, CK, CB1 = counts
    assert rec.ck_self_recursion(CK[:5], CB1[:5]) == 10
    assert rec.ck_self_recursion(CK[:6], CB1[:6]) == 60
    assert rec.ck_self_recursion(CK[:9], CB1[:9]) == 36954
    for n in range(2, 10):
        assert rec.ck_self_recursion(CK[:n + 1], CB1[:n + 1]) == CK[n + 1]


def test_single_factor_ck_recursion(counts):
    _, CK, CB1 = counts
    assert rec.ck_self_recursion_printed(CK[:5], CB1[:5]) == 10
    with pytest.raises(DivisibilityError):
        rec.ck_self_recursion_printed(CK[:6], CB1[:6])


def test_a_recursion(counts):
    K, CK, _ = counts
    rows = {r.n: r for r in rec.a_recursion_table(13, K)}
    assert rows[3].a_n == 0
    assert (rows[5].a_n, rows[5].implied_ck) == (4, 10)
    assert (rows[6].a_n, rows[6].implied_ck) == (30, 60)
    for n in range(5, 14):
        assert rows[n].a_n == K[n] - CK[n]
        assert rows[n].implied_ck == CK[n]


def test_ratio_table(counts):
    K, CK, _ = counts
    rows = {r.n: r for r in rec.ratio_table(12, K, CK)}
    assert 2 not in rows and 3 not in rows
    assert rows[5].ratio == Fraction(10, 14) and rows[5].decimal == "0.714286"
    assert rows[9].ratio == Fraction(36954, 47622) and rows[9].decimal == "0.775986"
    assert rows[12].ratio == Fraction(53088888, 63779034)
    assert rows[12].decimal == "0.832388"
    for n in range(6, 13):
        assert rows[n].identity_holds
    for n in range(8, 13):
        assert rows[n].ratio > rows[n - 1].ratio
    for r in rows.values():
        assert 0 <= r.ratio <= 1


def test_ratio_table_defaults():
    assert [r.n for r in rec.ratio_table(6)] == [1, 4, 5, 6]
