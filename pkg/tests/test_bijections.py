from collections import Counter

import pytest

from cylkings import oracle
from cylkings.bijections import (
    audit, classify_A, f0, f0_inv, f1, f1_inv, f2, f2_inv, f3, f3_preimages,
    in_A, is_edge_separator,
)
from cylkings.perm import is_cyl_king, is_king, make_permutation as P


def test_classify_examples():
    assert classify_A(P("426153")) == "B0"
    assert classify_A(P("5137246")) == "B1"
    assert classify_A(P("5724136")) == "B2"
    assert classify_A(P("364152")) == "B3"
    assert classify_A(P("531426")) == "B3"
    with pytest.raises(ValueError):
        classify_A(P("31425"))


def test_worked_examples():
    assert f0(P("426153")) == P("2413")
    assert f0_inv(P("2413")) == P("426153")
    assert f1(P("5137246")) == P("513624")
    assert f1_inv(f1(P("5137246"))) == P("5137246")
    assert f2(P("5724136")) == P("624135")
    assert f2_inv(P("624135")) == P("5724136")
    assert f3(P("364152")) == P("53142")
    assert f3(P("531426")) == P("53142")
    assert f3_preimages(P("53142")) == (P("531426"), P("364152"))


def test_wrong_class_rejected():
    with pytest.raises(ValueError):
        f0(P("364152"))
    with pytest.raises(ValueError):
        f3_preimages(P("2413"))


def test_b0_size_n6():
    sizes = Counter(classify_A(p) for p in oracle.enumerate_A(6))
    assert sizes["B0"] == len(list(oracle.enumerate_A(4))) == 2


def test_edge_separator():
    assert is_edge_separator(P("426153"), "last")
    assert is_edge_separator(P("31425"), "last")
    assert is_edge_separator(P("13524"), "last")
    assert is_edge_separator(P("2413"), "first")
    assert not is_edge_separator(P("31425"), "first")


def test_b0_removes_edge_separators():
    for n in range(6, 9):
        for p in oracle.enumerate_A(n):
            if classify_A(p) == "B0":
                assert is_edge_separator(p, "last")
                assert is_edge_separator(p, "first")


@pytest.mark.parametrize("n", range(4, 10))
def test_partition(n):
    A = list(oracle.enumerate_A(n))
    labels = [classify_A(p) for p in A]
    assert len(labels) == len(A)
    assert set(labels) <= {"B0", "B1", "B2", "B3"}


@pytest.mark.parametrize("n", range(5, 10))
def test_audit(n):
    a = audit(n)
    assert a.ok, a.failures
    assert a.sizes["B0"] == a.a_n2
    assert a.sizes["B1"] == a.sizes["B2"] == a.a_n1
    assert a.sizes["B3"] == 2 * a.ck_n1
    assert a.a_n == 2 * a.k_n1 + a.a_n2


@pytest.mark.parametrize("n", range(5, 10))
def test_codomains(n):
    for p in oracle.enumerate_A(n):
        c = classify_A(p)
        if c == "B1":
            assert in_A(f1(p))
        elif c == "B2":
            assert in_A(f2(p))
        elif c == "B3":
            q = f3(p)
            assert is_king(q) and is_cyl_king(q)


def test_boundary_values():
    # k = 1: k - 1 does not exist, so the inner test fails
    for p in oracle.enumerate_A(7):
        k = min(p[0], p[-1])
        if k == 1:
            assert classify_A(p) in ("B2", "B3")
        if k == 6:
            assert classify_A(p) in ("B1", "B3")
