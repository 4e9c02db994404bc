"""Truncated power series in z whose coefficients are polynomials in u.

Used to expand the generating functions of marked cyclic bonds (F), of
cyclic bonds (H) and of cylindrical kings (CK).  All arithmetic is exact;
denominators 1/(1 - x) are replaced by truncated geometric sums, which is
exact modulo z^(N+1) whenever x has no constant term.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable

from .poly import IntPoly

__all__ = [
    "UPolySeries", "series_add", "series_mul", "series_scale", "geometric",
    "run_factor", "last_run_factor", "series_F", "series_H",
    "series_H_closed_form", "series_CK", "series_CK_printed",
    "coefficient_table",
]

U = IntPoly.monomial(1)
ONE = IntPoly.constant(1)


class UPolySeries:
    """sum_{n=0..order} coeffs[n](u) z^n, everything above z^order dropped."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[IntPoly | int] = ()):
        if order < 0:
            raise ValueError("order must be >= 0")
        c = [x if isinstance(x, IntPoly) else IntPoly.constant(x) for x in coeffs]
        c = c[:order + 1]
        c += [IntPoly()] * (order + 1 - len(c))
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def z_power(cls, order: int, k: int, c: IntPoly | int = 1) -> "UPolySeries":
        coeffs = [IntPoly()] * (order + 1)
        if k <= order:
            coeffs[k] = c if isinstance(c, IntPoly) else IntPoly.constant(c)
        return cls(order, coeffs)

    def __getitem__(self, n: int) -> IntPoly:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPolySeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __add__(self, other: "UPolySeries") -> "UPolySeries":
        return series_add(self, other)

    def __sub__(self, other: "UPolySeries") -> "UPolySeries":
        return series_add(self, series_scale(other, -1))

    def __mul__(self, other) -> "UPolySeries":
        if isinstance(other, UPolySeries):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UPolySeries":
        result = UPolySeries.z_power(self.order, 0)
        for _ in range(k):
            result = result * self
        return result

    def valuation(self) -> int:
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                return n
        return self.order + 1

    def truncate(self, order: int) -> "UPolySeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return UPolySeries(order, self.coeffs[:order + 1])

    def map_coeffs(self, f) -> "UPolySeries":
        return UPolySeries(self.order, (f(c) for c in self.coeffs))

    def at_u(self, value: int) -> list[int]:
        return [c(value) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"UPolySeries({self.order}, {list(self.coeffs)!r})"


def _same_order(a: UPolySeries, b: UPolySeries) -> None:
    if a.order != b.order:
        raise ValueError(f"truncation orders differ: {a.order} vs {b.order}")


def series_add(a: UPolySeries, b: UPolySeries) -> UPolySeries:
    _same_order(a, b)
    return UPolySeries(a.order, (x + y for x, y in zip(a.coeffs, b.coeffs)))


def series_mul(a: UPolySeries, b: UPolySeries) -> UPolySeries:
    _same_order(a, b)
    N = a.order
    out = [IntPoly()] * (N + 1)
    for i, x in enumerate(a.coeffs):
        if x.is_zero():
            continue
        for j in range(N + 1 - i):
            y = b.coeffs[j]
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return UPolySeries(N, out)


def series_scale(s: UPolySeries, c: IntPoly | int) -> UPolySeries:
    return UPolySeries(s.order, (x * c for x in s.coeffs))


def geometric(x: UPolySeries, power: int = 1) -> UPolySeries:
    """(1 - x)^(-power) for a series x without constant term."""
    if not x[0].is_zero():
        raise ValueError("geometric expansion needs a series without constant term")
    N = x.order
    one = UPolySeries.z_power(N, 0)
    g = one
    xk = one
    for _ in range(N):
        xk = xk * x
        g = g + xk
    return g ** power


def run_factor(N: int) -> UPolySeries:
    """z + sum_{k>=2} 2 z^k u^(k-1): one run that is not the last."""
    coeffs = [IntPoly(), ONE] + [IntPoly.monomial(k - 1, 2) for k in range(2, N + 1)]
    return UPolySeries(N, coeffs)


def last_run_factor(N: int) -> UPolySeries:
    """z + sum_{k>=2} 2k z^k u^(k-1): the last run, with its k possible wraps."""
    coeffs = [IntPoly(), ONE] + [IntPoly.monomial(k - 1, 2 * k) for k in range(2, N + 1)]
    return UPolySeries(N, coeffs)


def series_F(N: int) -> UPolySeries:
    """Marked cyclic bonds: -2 z^2 u + sum_{m>=1} m! R^(m-1) L, modulo z^(N+1)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    R = run_factor(N)
    L = last_run_factor(N)
    acc = UPolySeries.z_power(N, 2, IntPoly.monomial(1, -2))
    Rpow = UPolySeries.z_power(N, 0)
    # R^(m-1) has z-valuation m-1, so the sum is finite
    for m in range(1, N + 2):
        acc = acc + factorial(m) * (Rpow * L)
        Rpow = Rpow * R
    return acc


def series_H(N: int) -> UPolySeries:
    """Cyclic bonds: F(z, u - 1)."""
    return series_F(N).map_coeffs(lambda c: c.shift(-1))


def series_H_closed_form(N: int, w: IntPoly | None = None) -> UPolySeries:
    """Expand the rational closed form of H with x = z*w, w = u - 1 by default.

    -2 z^2 w + sum_m m! z^(m-1) ((1+x)/(1-x))^(m-1) (z + 2z(2x - x^2)/(1-x)^2)
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if w is None:
        w = U - 1
    z = UPolySeries.z_power(N, 1)
    one = UPolySeries.z_power(N, 0)
    x = z * w
    inv = geometric(x)
    ratio = (one + x) * inv
    last = z + 2 * z * (2 * x - x * x) * (inv * inv)
    acc = UPolySeries.z_power(N, 2, -2 * w)
    term = one  # z^(m-1) ratio^(m-1)
    for m in range(1, N + 2):
        acc = acc + factorial(m) * (term * last)
        term = term * z * ratio
    return acc


def series_CK(N: int) -> list[int]:
    """Coefficients of z^1..z^N of H(z, 0)."""
    H = series_H(N)
    return [c(0) for c in H.coeffs[1:]]


def series_CK_printed(N: int, exponent: int) -> list[int]:
    """Coefficients z^1..z^N of

        2z^2 + sum_m m! z^(m-1) ((1-z)/(1+z))^(m-1) z (1-2z-z^2)^e / (1+z)^2

    for e = ``exponent``.  Substituting u = 0 into H gives e = 1.
    """
    if exponent not in (1, 2):
        raise ValueError("exponent must be 1 or 2")
    if N < 1:
        raise ValueError("N must be >= 1")
    z = UPolySeries.z_power(N, 1)
    one = UPolySeries.z_power(N, 0)
    inv = geometric(-1 * z)  # 1/(1+z)
    ratio = (one - z) * inv
    quad = one - 2 * z - z * z
    last = z * quad ** exponent * (inv * inv)
    acc = UPolySeries.z_power(N, 2, 2)
    term = one
    for m in range(1, N + 2):
        acc = acc + factorial(m) * (term * last)
        term = term * z * ratio
    return [c(0) for c in acc.coeffs[1:]]


def coefficient_table(s: UPolySeries, var: str = "u") -> list[str]:
    return [c.render(var) for c in s.coeffs]

