"""Verification runs: each subject checks one identity against the
enumeration engines over a range of orders and returns a report."""

from __future__ import annotations

import bisect
import itertools
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import bijections, marked, oracle, recurrences as rec, series
from .oeis import load_sequence
from .perm import Permutation
from .poly import DivisibilityError, IntPoly

__all__ = ["Failure", "VerificationReport", "SUBJECTS", "DEFAULT_MAX_N",
           "run", "oeis_report"]


@dataclass(frozen=True)
class Failure:
    n: int
    expected: str
    actual: str


@dataclass
class VerificationReport:
    subject: str
    range: list[int]
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        rep = cls(d["subject"], list(d["range"]),
                  [Failure(**f) for f in d["failures"]], list(d.get("notes", [])))
        if d.get("status", rep.status) != rep.status:
            raise ValueError("status does not match failures")
        return rep


def _render(x) -> str:
    if isinstance(x, IntPoly):
        return x.render()
    return str(x)


class _Checker:
    def __init__(self, subject: str):
        self.report = VerificationReport(subject, [])

    def eq(self, n: int, expected, actual) -> None:
        if n not in self.report.range:
            bisect.insort(self.report.range, n)
        if expected != actual:
            self.report.failures.append(Failure(n, _render(expected), _render(actual)))

    def note(self, text: str) -> None:
        self.report.notes.append(text)


def _counts(max_n: int) -> tuple[list[int], list[int]]:
    K = [1] + [oracle.count_kings(n) for n in range(1, max_n + 1)]
    CK = [1] + [oracle.count_cyl_kings(n) for n in range(1, max_n + 1)]
    return K, CK


def _try(fn, *args):
    try:
        return fn(*args)
    except DivisibilityError as exc:
        return f"DivisibilityError: {exc}"


def check_cbond1(max_n: int) -> VerificationReport:
    c = _Checker("cbond1")
    B = rec.bond_polys(max_n - 1)
    for m in range(3, max_n + 1):
        c.eq(m, oracle.dist_cbnd(m).as_poly(), rec.cb_from_b(B[:m]))
    return c.report


def check_cbond2(max_n: int) -> VerificationReport:
    c = _Checker("cbond2")
    for n in range(1, max_n + 1):
        CB = oracle.dist_cbnd(n).as_poly()
        c.eq(n, oracle.dist_bnd(n).as_poly(), _try(rec.b_from_cb, n, CB))
    return c.report


def check_cbond3(max_n: int) -> VerificationReport:
    c = _Checker("cbond3")
    CB = rec.cyclic_bond_polys(max_n)
    for m in range(3, max_n + 1):
        n = m - 1
        got = _try(rec.cb_self_recursion, CB[:n + 1])
        c.eq(m, CB[m], got)
        via = rec.cb_from_b([IntPoly.constant(1)]
                            + [rec.b_from_cb(j, CB[j]) for j in range(1, n + 1)])
        c.eq(m, via, got)
        printed = _try(rec.cb_self_recursion_printed, CB[:n + 1])
        if printed != CB[m]:
            c.note(f"single-factor form misses CB_{m}: {_render(printed)}")
    return c.report


def check_corollary1(max_n: int) -> VerificationReport:
    c = _Checker("corollary1")
    K, CK = _counts(max_n)
    for m in range(3, max_n + 1):
        c.eq(m, CK[m], rec.ck_from_k(K[:m]))
    return c.report


def check_corollary2(max_n: int) -> VerificationReport:
    c = _Checker("corollary2")
    K, CK = _counts(max_n)
    for n in range(1, max_n + 1):
        c.eq(n, K[n], _try(rec.k_from_ck_cb1, n, CK[n], oracle.cb1(n)))
    return c.report


def check_corollary3(max_n: int) -> VerificationReport:
    c = _Checker("corollary3")
    _, CK = _counts(max_n)
    CB1 = [0] + [oracle.cb1(n) for n in range(1, max_n)]
    for m in range(3, max_n + 1):
        n = m - 1
        c.eq(m, CK[m], _try(rec.ck_self_recursion, CK[:n + 1], CB1[:n + 1]))
        printed = _try(rec.ck_self_recursion_printed, CK[:n + 1], CB1[:n + 1])
        if printed != CK[m]:
            c.note(f"single-factor form misses |CK_{m}|: {printed}")
    return c.report


def check_recursion(max_n: int) -> VerificationReport:
    c = _Checker("recursion")
    K, CK = _counts(max_n)
    for row in rec.a_recursion_table(max_n, K):
        if row.n >= 5:
            c.eq(row.n, K[row.n] - CK[row.n], row.a_n)
            c.eq(row.n, CK[row.n], row.implied_ck)
    return c.report


def check_eq_kn(max_n: int) -> VerificationReport:
    c = _Checker("eq-kn")
    K, CK = _counts(max_n)
    rows = {r.n: r for r in rec.ratio_table(max_n, K, CK)}
    for n in range(6, max_n + 1):
        c.eq(n, rows[n].ratio, rows[n].decomposition)
    for n in range(8, max_n + 1):
        if not rows[n].ratio > rows[n - 1].ratio:
            c.eq(n, f"ratio above {rows[n - 1].ratio}", rows[n].ratio)
    if max_n in rows:
        c.note(f"ratio({max_n}) = {rows[max_n].decimal}")
    return c.report


def check_series_H(max_n: int) -> VerificationReport:
    c = _Checker("series-H")
    H = series.series_H(max_n)
    for n in [1] + list(range(3, min(max_n, oracle.CAPS.brute_force) + 1)):
        c.eq(n, oracle.dist_cbnd(n).as_poly(), H[n])
    if max_n >= 2:
        c.eq(2, IntPoly((0, 2)), H[2])
        c.note("z^2 coefficient is 2u, not the 2u^2 of the S_2 convention")
    closed = series.series_H_closed_form(max_n)
    for n in range(max_n + 1):
        c.eq(n, H[n], closed[n])
    return c.report


def check_series_CK(max_n: int) -> VerificationReport:
    c = _Checker("series-CK")
    _, CK = _counts(max_n)
    got = series.series_CK(max_n)
    one = series.series_CK_printed(max_n, 1)
    for n in range(1, max_n + 1):
        c.eq(n, CK[n], got[n - 1])
        c.eq(n, CK[n], one[n - 1])
    if max_n >= 2:
        two = series.series_CK_printed(max_n, 2)
        c.note(f"squared factor gives z^2 coefficient {two[1]} (should be 0)")
    return c.report


def check_bijections(max_n: int) -> VerificationReport:
    c = _Checker("bijections")
    for n in range(5, max_n + 1):
        a = bijections.audit(n)
        c.eq(n, [], a.failures)
        c.note(f"n={n} " + " ".join(f"{k}={v}" for k, v in a.sizes.items()))
    return c.report


def check_marked(max_n: int) -> VerificationReport:
    c = _Checker("marked")
    for n in range(1, min(max_n, 6) + 1):
        bad = 0
        for vals in itertools.permutations(range(1, n + 1)):
            for mp in marked.all_markings(Permutation(vals)):
                if marked.decode(marked.encode(mp), n) != mp:
                    bad += 1
        c.eq(n, 0, bad)
    F = series.series_F(max_n)
    for n in range(3, max_n + 1):
        direct = marked.marked_table_direct(n).counts
        a = oracle.dist_cbnd(n).counts
        c.eq(n, marked.binomial_transform(a), direct)
        c.eq(n, marked.inverse_binomial_transform(direct), tuple(IntPoly(a).coeffs))
        c.eq(n, IntPoly(direct), F[n])
    return c.report


# subject -> (checker, default max_n, largest allowed max_n before caps)
SUBJECTS: dict[str, tuple[Callable[[int], VerificationReport], int, str]] = {
    "cbond1": (check_cbond1, 10, "brute"),
    "cbond2": (check_cbond2, 10, "brute"),
    "cbond3": (check_cbond3, 10, "brute"),
    "corollary1": (check_corollary1, 13, "count"),
    "corollary2": (check_corollary2, 10, "brute"),
    "corollary3": (check_corollary3, 10, "brute"),
    "recursion": (check_recursion, 12, "count"),
    "eq-kn": (check_eq_kn, 12, "count"),
    "series-H": (check_series_H, 9, "order"),
    "series-CK": (check_series_CK, 12, "order"),
    "bijections": (check_bijections, 9, "count"),
    "marked": (check_marked, 8, "brute"),
}

DEFAULT_MAX_N = {k: v[1] for k, v in SUBJECTS.items()}


def _limit(kind: str) -> int:
    caps = oracle.CAPS
    if kind == "brute":
        return caps.brute_force
    if kind == "count":
        return caps.backtracking
    return min(caps.series_order, caps.backtracking)


def run(subject: str, max_n: int | None = None) -> VerificationReport:
    if subject not in SUBJECTS:
        raise KeyError(f"unknown subject {subject!r}")
    fn, default, kind = SUBJECTS[subject]
    n = default if max_n is None else max_n
    limit = _limit(kind)
    if n > limit:
        raise oracle.CapError(f"{subject}: max_n={n} exceeds the cap of {limit}")
    return fn(n)


def oeis_report(seq_id: str, max_n: int, offline: bool = True,
                cache_dir=None) -> VerificationReport:
    seq = load_sequence(seq_id, offline=offline, cache_dir=cache_dir)
    count = oracle.count_kings if seq_id == "A002464" else oracle.count_cyl_kings
    c = _Checker(seq_id)
    c.note(f"source: {seq.source}")
    for n in range(1, max_n + 1):
        if n not in seq.terms:
            c.note(f"no reference term for n={n}")
            continue
        c.eq(n, seq[n], count(n))
    return c.report
