"""Polynomial and integer recursions relating bonds, cyclic bonds, kings
and cylindrical kings.

Every division by n is done with :func:`div_exact_scalar` (or its integer
counterpart), so a recursion that does not hold shows up as a
:class:`DivisibilityError` instead of a silently rounded value.

Two printed identities are kept next to their corrected forms:
``cb_self_recursion_printed`` and ``ck_self_recursion_printed`` put a
single factor 1/n in front of the whole derivative sum, which is only
right while every lower-order term of that sum vanishes (n <= 2 for the
polynomials, n <= 4 for the counts).  The unsuffixed functions divide each
term CB_j' by its own order j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import oracle
from .perm import bnd, cbnd
from .poly import (
    DivisibilityError, IntPoly, ONE_MINUS_T, T_MINUS_ONE, derivative,
    div_exact_scalar, pow_binomial,
)

__all__ = [
    "bond_polys", "cyclic_bond_polys", "IntermediatePolys", "intermediates",
    "x_closed_form", "cb_from_b", "b_from_cb", "cb_self_recursion",
    "cb_self_recursion_printed", "ck_from_k", "k_from_ck_cb1",
    "ck_self_recursion", "ck_self_recursion_printed", "ARow",
    "a_recursion_table", "RatioRow", "ratio_table", "exact_div",
    "filtered_b1", "filtered_b2", "filtered_cz",
]

ONE = IntPoly.constant(1)


def exact_div(a: int, n: int) -> int:
    q, r = divmod(a, n)
    if r:
        raise DivisibilityError(0, a, n)
    return q


def bond_polys(n: int) -> list[IntPoly]:
    """[B_0, ..., B_n] from the brute-force oracle, B_0 = 1."""
    return [ONE] + [oracle.dist_bnd(k).as_poly() for k in range(1, n + 1)]


def cyclic_bond_polys(n: int) -> list[IntPoly]:
    """[CB_0, ..., CB_n] from the brute-force oracle, CB_0 = 1."""
    return [ONE] + [oracle.dist_cbnd(k).as_poly() for k in range(1, n + 1)]


@dataclass(frozen=True)
class IntermediatePolys:
    n: int
    b1: IntPoly  # sum of t^bnd over p with p_1 = n
    b2: IntPoly  # sum of t^bnd over p with p_n = n
    x: IntPoly   # b1 + b2, from the closed form
    cz: IntPoly  # sum of t^cbnd over p with p_n = n


def x_closed_form(n: int, B: Sequence[IntPoly]) -> IntPoly:
    """2 * sum_{i=1..n} (t-1)^(i-1) B_{n-i}."""
    acc = IntPoly()
    for i in range(1, n + 1):
        acc = acc + pow_binomial(T_MINUS_ONE, i - 1) * B[n - i]
    return 2 * acc


def intermediates(n: int, B: Sequence[IntPoly] | None = None) -> IntermediatePolys:
    """B_n^1, B_n^2, X_n and CZ_n built from the bond polynomials B_0..B_n.

    b1 and b2 follow B_k^j = B_{k-1} + (t-1) B_{k-1}^j from B_1^j = 1.  cz
    uses CZ_n = B_{n-1} + (t-1) X_{n-1} for n >= 3; CZ_1 = 1 and CZ_2 = t^2
    are taken from the definition since that relation needs n - 1 >= 2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if B is None:
        B = bond_polys(n)
    b1 = b2 = ONE
    for k in range(2, n + 1):
        b1 = B[k - 1] + T_MINUS_ONE * b1
        b2 = B[k - 1] + T_MINUS_ONE * b2
    x = x_closed_form(n, B)
    if n == 1:
        cz = ONE
    elif n == 2:
        cz = IntPoly.monomial(2)
    else:
        prev = intermediates(n - 1, B)
        cz = (B[n - 1] - prev.b1 - prev.b2) + IntPoly.monomial(1) * (prev.b1 + prev.b2)
    return IntermediatePolys(n, b1, b2, x, cz)


def cb_from_b(B: Sequence[IntPoly]) -> IntPoly:
    """CB_{n+1} from B_0..B_n, n = len(B) - 1 >= 2."""
    n = len(B) - 1
    if n < 2:
        raise ValueError("need B_0..B_n with n >= 2")
    acc = IntPoly()
    for i in range(1, n + 1):
        acc = acc + pow_binomial(T_MINUS_ONE, i) * B[n - i]
    return (n + 1) * B[n] + 2 * (n + 1) * acc


def b_from_cb(n: int, CB: IntPoly) -> IntPoly:
    """B_n = CB_n + (1/n)(1-t) CB_n'; raises DivisibilityError if n does not divide."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return CB + div_exact_scalar(ONE_MINUS_T * derivative(CB), n)


def _alt_sum(n: int, seq: Sequence[IntPoly]) -> IntPoly:
    # seq[n] + 2 sum_{i=1..n} (t-1)^i seq[n-i]
    acc = IntPoly()
    for i in range(1, n + 1):
        acc = acc + pow_binomial(T_MINUS_ONE, i) * seq[n - i]
    return seq[n] + 2 * acc


def cb_self_recursion(CB: Sequence[IntPoly]) -> IntPoly:
    """CB_{n+1} from CB_0..CB_n alone (n = len(CB) - 1 >= 2).

    Obtained by substituting B_j = CB_j + (1/j)(1-t) CB_j' into
    :func:`cb_from_b`; each derivative is divided by its own order j.
    """
    n = len(CB) - 1
    if n < 2:
        raise ValueError("need CB_0..CB_n with n >= 2")
    # D[j] = CB_j' / j, exact when the bond/cyclic-bond identity holds
    D = [IntPoly()] + [div_exact_scalar(derivative(CB[j]), j) for j in range(1, n + 1)]
    return (n + 1) * _alt_sum(n, CB) + (n + 1) * ONE_MINUS_T * _alt_sum(n, D)


def cb_self_recursion_printed(CB: Sequence[IntPoly]) -> IntPoly:
    """The self-recursion with one common factor (n+1)/n on the derivative sum.

    Raises DivisibilityError once the lower-order derivative terms stop
    vanishing (first at n = 3).
    """
    n = len(CB) - 1
    if n < 2:
        raise ValueError("need CB_0..CB_n with n >= 2")
    D = [derivative(c) for c in CB]
    tail = div_exact_scalar((n + 1) * ONE_MINUS_T * _alt_sum(n, D), n)
    return (n + 1) * _alt_sum(n, CB) + tail


def ck_from_k(K: Sequence[int]) -> int:
    """|CK_{n+1}| from |K_0|..|K_n| (|K_0| = 1), n = len(K) - 1 >= 2."""
    n = len(K) - 1
    if n < 2:
        raise ValueError("need K_0..K_n with n >= 2")
    s = sum((-1) ** i * K[n - i] for i in range(1, n + 1))
    return (n + 1) * K[n] + 2 * (n + 1) * s


def k_from_ck_cb1(n: int, ck: int, cb1: int) -> int:
    """|K_n| = |CK_n| + |CB_{1,n}| / n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return ck + exact_div(cb1, n)


def _alt_int(n: int, seq: Sequence[int | Fraction]) -> int | Fraction:
    return seq[n] + 2 * sum((-1) ** i * seq[n - i] for i in range(1, n + 1))


def ck_self_recursion(CK: Sequence[int], CB1: Sequence[int]) -> int:
    """|CK_{n+1}| from |CK_0..n| and |CB_{1,0..n}|, n = len(CK) - 1 >= 2.

    The constant-term reading of :func:`cb_self_recursion`: each
    |CB_{1,j}| is divided by its own order j.
    """
    n = len(CK) - 1
    if n < 2 or len(CB1) != n + 1:
        raise ValueError("need CK_0..CK_n and CB1_0..CB1_n with n >= 2")
    per_order = [0] + [exact_div(CB1[j], j) for j in range(1, n + 1)]
    return (n + 1) * _alt_int(n, CK) + (n + 1) * _alt_int(n, per_order)


def ck_self_recursion_printed(CK: Sequence[int], CB1: Sequence[int]) -> int:
    """Constant-term version of :func:`cb_self_recursion_printed`.

    Raises DivisibilityError when (n+1) times the alternating sum is not a
    multiple of n (first at n = 5).
    """
    n = len(CK) - 1
    if n < 2 or len(CB1) != n + 1:
        raise ValueError("need CK_0..CK_n and CB1_0..CB1_n with n >= 2")
    return (n + 1) * _alt_int(n, CK) + exact_div((n + 1) * _alt_int(n, CB1), n)


@dataclass(frozen=True)
class ARow:
    n: int
    a_n: int
    implied_ck: int


def a_recursion_table(max_n: int, K: Sequence[int], a3: int = 0,
                      a4: int = 2) -> list[ARow]:
    """|A_n| = 2|K_{n-1}| + |A_{n-2}| from the base values |A_3|, |A_4|.

    ``K`` is indexed by order (K[n] = |K_n|) and must reach max_n.
    """
    if max_n < 3:
        return []
    A = {3: a3, 4: a4}
    for n in range(5, max_n + 1):
        A[n] = 2 * K[n - 1] + A[n - 2]
    return [ARow(n, A[n], K[n] - A[n]) for n in range(3, max_n + 1)]


@dataclass(frozen=True)
class RatioRow:
    n: int
    ratio: Fraction          # |CK_n| / |K_n|
    decomposition: Fraction  # 1 - 2K_{n-1}/K_n - K_{n-2}/K_n + CK_{n-2}/K_n

    @property
    def decimal(self) -> str:
        return f"{float(self.ratio):.6f}"

    @property
    def identity_holds(self) -> bool:
        return self.ratio == self.decomposition


def ratio_table(max_n: int, K: Sequence[int] | None = None,
                CK: Sequence[int] | None = None) -> list[RatioRow]:
    """Exact |CK_n|/|K_n| for n = 1..max_n, skipping orders with no kings.

    K and CK are indexed by order with K[0] = CK[0] = 1; they default to
    the depth-first counts.
    """
    if K is None:
        K = [1] + [oracle.count_kings(n) for n in range(1, max_n + 1)]
    if CK is None:
        CK = [1] + [oracle.count_cyl_kings(n) for n in range(1, max_n + 1)]
    rows = []
    for n in range(1, max_n + 1):
        if K[n] == 0:
            continue
        r = Fraction(CK[n], K[n])
        if n >= 2:
            d = 1 - Fraction(2 * K[n - 1] + K[n - 2] - CK[n - 2], K[n])
        else:
            d = r
        rows.append(RatioRow(n, r, d))
    return rows


def filtered_b1(n: int) -> IntPoly:
    """Brute-force B_n^1: permutations starting with n."""
    return oracle.dist_filtered(n, bnd, lambda p: p[0] == n)


def filtered_b2(n: int) -> IntPoly:
    """Brute-force B_n^2: permutations ending with n."""
    return oracle.dist_filtered(n, bnd, lambda p: p[-1] == n)


def filtered_cz(n: int) -> IntPoly:
    """Brute-force CZ_n: cyclic bonds over permutations ending with n."""
    return oracle.dist_filtered(n, cbnd, lambda p: p[-1] == n)
