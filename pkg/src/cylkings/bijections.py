"""The split of A_n (kings with an edge bond) into four classes and the maps
that send them onto A_{n-2}, A_{n-1}, A_{n-1} and (two to one) CK_{n-1}.

With k = min(p_1, p_n), a permutation of A_n looks like [k, ..., k+1] or
[k+1, ..., k].  Its class depends on two neighbour tests:

    [k, a, ..., b, k+1]:   inner = (b == k-1),  outer = (a == k+2)
    [k+1, a, ..., b, k]:   inner = (a == k-1),  outer = (b == k+2)

B0: both hold; B1: only ``inner``; B2: only ``outer``; B3: neither.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Literal

from . import oracle
from .perm import Permutation, delete_standardize, insert_value, is_king

__all__ = [
    "AClass", "classify_A", "in_A", "f0", "f0_inv", "f1", "f1_inv", "f2",
    "f2_inv", "f3", "f3_preimages", "is_edge_separator", "BijectionAudit",
    "audit",
]

AClass = Literal["B0", "B1", "B2", "B3"]


def in_A(p) -> bool:
    return len(p) >= 2 and is_king(p) and abs(p[0] - p[-1]) == 1


def _require_A(p) -> None:
    if not in_A(p):
        raise ValueError(f"{p} is not a king with an edge bond")


def _tests(p) -> tuple[bool, bool]:
    k = min(p[0], p[-1])
    if p[0] == k:
        return p[-2] == k - 1, p[1] == k + 2
    return p[1] == k - 1, p[-2] == k + 2


def classify_A(p) -> AClass:
    _require_A(p)
    if len(p) < 4:
        raise ValueError("classification needs n >= 4")
    inner, outer = _tests(p)
    if inner and outer:
        return "B0"
    if inner:
        return "B1"
    if outer:
        return "B2"
    return "B3"


def _require_class(p, label: AClass) -> None:
    got = classify_A(p)
    if got != label:
        raise ValueError(f"{p} lies in {got}, not {label}")


def f0(p: Permutation) -> Permutation:
    """Drop the last entry, then the first."""
    _require_class(p, "B0")
    q = delete_standardize(p, len(p))
    return delete_standardize(q, 1)


def f0_inv(q: Permutation) -> Permutation:
    _require_A(q)
    a = max(q[0], q[-1])
    n = len(q)
    if q[0] < q[-1]:
        # [a-1, ..., a] -> [a+1, a-1, ..., a+2, a]
        return insert_value(insert_value(q, 1, a), n + 2, a)
    # [a, ..., a-1] -> [a, a+2, ..., a-1, a+1]
    return insert_value(insert_value(q, 1, a), n + 2, a + 1)


def f1(p: Permutation) -> Permutation:
    """Remove max(p_1, p_n)."""
    _require_class(p, "B1")
    return delete_standardize(p, 1 if p[0] > p[-1] else len(p))


def f1_inv(q: Permutation) -> Permutation:
    _require_A(q)
    a = max(q[0], q[-1])
    if q[0] == a:
        return insert_value(q, len(q) + 1, a + 1)
    return insert_value(q, 1, a + 1)


def f2(p: Permutation) -> Permutation:
    """Remove min(p_1, p_n)."""
    _require_class(p, "B2")
    return delete_standardize(p, 1 if p[0] < p[-1] else len(p))


def f2_inv(q: Permutation) -> Permutation:
    _require_A(q)
    a = max(q[0], q[-1])
    if q[0] == a:
        return insert_value(q, 1, a - 1)
    return insert_value(q, len(q) + 1, a - 1)


def f3(p: Permutation) -> Permutation:
    """Remove max(p_1, p_n); two to one onto CK_{n-1}."""
    _require_class(p, "B3")
    return delete_standardize(p, 1 if p[0] > p[-1] else len(p))


def f3_preimages(q: Permutation) -> tuple[Permutation, Permutation]:
    """For q = [a, ..., b] in CK_{n-1}: (a+1 appended after b, b+1 put before a)."""
    n = len(q)
    if n < 3 or not is_king(q) or abs(q[0] - q[-1]) == 1:
        raise ValueError(f"{q} is not a cylindrical king")
    a, b = q[0], q[-1]
    return insert_value(q, n + 1, a + 1), insert_value(q, 1, b + 1)


def is_edge_separator(p, side: Literal["first", "last"]) -> bool:
    n = len(p)
    if n < 3:
        raise ValueError("needs n >= 3")
    if side == "last":
        return abs(p[0] - p[-2]) == 1
    if side == "first":
        return abs(p[-1] - p[1]) == 1
    raise ValueError(f"side must be 'first' or 'last', got {side!r}")


@dataclass
class BijectionAudit:
    n: int
    sizes: dict[str, int]
    a_n: int
    a_n1: int
    a_n2: int
    ck_n1: int
    k_n1: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def audit(n: int) -> BijectionAudit:
    """Exhaustively check the partition and the four maps at order n >= 5."""
    if n < 5:
        raise ValueError("the audit needs n >= 5")
    A_n = list(oracle.enumerate_A(n))
    A_n1 = set(oracle.enumerate_A(n - 1))
    A_n2 = set(oracle.enumerate_A(n - 2))
    CK_n1 = set(oracle.enumerate_cyl_kings(n - 1))
    k_n1 = oracle.count_kings(n - 1)
    classes: dict[str, list[Permutation]] = {c: [] for c in ("B0", "B1", "B2", "B3")}
    for p in A_n:
        classes[classify_A(p)].append(p)
    fail: list[str] = []

    def check_bijection(name, fwd, inv, dom, cod):
        img = [fwd(p) for p in dom]
        if set(img) - cod:
            fail.append(f"{name}: image leaves the codomain")
        if len(set(img)) != len(dom) or set(img) != cod:
            fail.append(f"{name}: not a bijection ({len(dom)} -> {len(cod)})")
        for p, q in zip(dom, img):
            if inv(q) != p:
                fail.append(f"{name}: inverse fails at {p}")
                break
        for q in cod:
            if fwd(inv(q)) != q:
                fail.append(f"{name}: forward of inverse fails at {q}")
                break

    check_bijection("f0", f0, f0_inv, classes["B0"], A_n2)
    check_bijection("f1", f1, f1_inv, classes["B1"], A_n1)
    check_bijection("f2", f2, f2_inv, classes["B2"], A_n1)

    hits = Counter(f3(p) for p in classes["B3"])
    if set(hits) != CK_n1 or any(c != 2 for c in hits.values()):
        fail.append("f3: not two to one onto CK_{n-1}")
    B3 = set(classes["B3"])
    for q in CK_n1:
        pre = f3_preimages(q)
        if pre[0] == pre[1] or not set(pre) <= B3 or any(f3(p) != q for p in pre):
            fail.append(f"f3: bad preimages of {q}")
            break

    sizes = {c: len(v) for c, v in classes.items()}
    if sum(sizes.values()) != len(A_n):
        fail.append("classes do not exhaust A_n")
    assembled = len(A_n2) + 2 * len(A_n1) + 2 * len(CK_n1)
    if len(A_n) != assembled or assembled != 2 * k_n1 + len(A_n2):
        fail.append("assembled recursion fails")
    return BijectionAudit(n, sizes, len(A_n), len(A_n1), len(A_n2),
                          len(CK_n1), k_n1, fail)
