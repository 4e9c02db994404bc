"""Dense univariate polynomials with exact integer coefficients."""

from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "IntPoly", "DivisibilityError", "add", "sub", "mul", "scale",
    "derivative", "div_exact_scalar", "eval_at_zero", "eval_at_one",
    "pow_binomial", "T_MINUS_ONE", "ONE_MINUS_T",
]


class DivisibilityError(ArithmeticError):
    """A coefficient was not divisible by the requested integer."""

    def __init__(self, exponent: int, coefficient: int, divisor: int):
        self.exponent = exponent
        self.coefficient = coefficient
        self.divisor = divisor
        super().__init__(
            f"coefficient {coefficient} of exponent {exponent} "
            f"is not divisible by {divisor}")


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """c[0] + c[1] x + ... + c[d] x^d; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _normalize(coeffs)
        for x in c:
            if not isinstance(x, int):
                raise TypeError(f"coefficients must be int, got {x!r}")
        self.coeffs = c

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly.constant(other)
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-x for x in self.coeffs)

    def __sub__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly.constant(other)
        return sub(self, other)

    def __rsub__(self, other) -> "IntPoly":
        return IntPoly.constant(other) - self

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        result = IntPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c: int) -> "IntPoly":
        """Substitute x -> x + c."""
        acc = IntPoly()
        lin = IntPoly((c, 1))
        for a in reversed(self.coeffs):
            acc = acc * lin + a
        return acc

    def render(self, var: str = "t") -> str:
        """Text form ``c_k*t^k + ... + c_0`` with descending exponents."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    m = max(len(a), len(b))
    return IntPoly(a[k] + b[k] for k in range(m))


def sub(a: IntPoly, b: IntPoly) -> IntPoly:
    m = max(len(a), len(b))
    return IntPoly(a[k] - b[k] for k in range(m))


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if a.is_zero() or b.is_zero():
        return IntPoly()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return IntPoly(out)


def scale(a: IntPoly, c: int) -> IntPoly:
    return IntPoly(c * x for x in a.coeffs)


def derivative(a: IntPoly) -> IntPoly:
    return IntPoly(k * a[k] for k in range(1, len(a)))


def div_exact_scalar(a: IntPoly, n: int) -> IntPoly:
    """Coefficientwise exact division; raises DivisibilityError otherwise."""
    if n <= 0:
        raise ValueError("divisor must be positive")
    out = []
    for k, c in enumerate(a.coeffs):
        q, r = divmod(c, n)
        if r:
            raise DivisibilityError(k, c, n)
        out.append(q)
    return IntPoly(out)


def eval_at_zero(a: IntPoly) -> int:
    return a[0]


def eval_at_one(a: IntPoly) -> int:
    return sum(a.coeffs)


T_MINUS_ONE = IntPoly((-1, 1))
ONE_MINUS_T = IntPoly((1, -1))


def pow_binomial(base: IntPoly, i: int) -> IntPoly:
    """``base ** i`` for the two binomials t-1 and 1-t."""
    if base != T_MINUS_ONE and base != ONE_MINUS_T:
        raise ValueError("base must be t-1 or 1-t")
    if i < 0:
        raise ValueError("exponent must be nonnegative")
    return base ** i


def from_coeffs(coeffs: Sequence[int]) -> IntPoly:
    return IntPoly(coeffs)
