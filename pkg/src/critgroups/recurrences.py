"""Spanning-tree counts of polygon stacks: the two-term recurrence, rooted
forest counts, and the closed forms evaluated in exact quadratic arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graphs import check_stack_spec


class QuadraticNumber:
    """Exact element a + b*sqrt(disc) of a real quadratic field.

    Arithmetic is closed for a fixed nonnegative discriminant; mixing
    different discriminants is an error unless one operand is rational.
    """

    __slots__ = ("a", "b", "disc")

    def __init__(self, a, b, disc: int):
        if disc < 0:
            raise ValueError(f"discriminant must be nonnegative, got {disc}")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.disc = int(disc)

    def _align(self, other) -> tuple["QuadraticNumber", "QuadraticNumber", int]:
        """Bring both operands onto a common discriminant."""
        if isinstance(other, (int, Fraction)):
            other = QuadraticNumber(other, 0, self.disc)
        elif not isinstance(other, QuadraticNumber):
            raise TypeError(f"cannot mix QuadraticNumber with {type(other).__name__}")
        if self.disc == other.disc:
            return self, other, self.disc
        if other.b == 0:
            return self, QuadraticNumber(other.a, 0, self.disc), self.disc
        if self.b == 0:
            return QuadraticNumber(self.a, 0, other.disc), other, other.disc
        raise ValueError(f"mixed discriminants {self.disc} and {other.disc}")

    def __add__(self, other):
        x, y, disc = self._align(other)
        return QuadraticNumber(x.a + y.a, x.b + y.b, disc)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.disc)

    def __sub__(self, other):
        x, y, disc = self._align(other)
        return QuadraticNumber(x.a - y.a, x.b - y.b, disc)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        x, y, disc = self._align(other)
        return QuadraticNumber(
            x.a * y.a + x.b * y.b * disc,
            x.a * y.b + x.b * y.a,
            disc,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.disc)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.disc

    def __truediv__(self, other):
        x, y, disc = self._align(other)
        n = y.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero quadratic number")
        num = x * y.conjugate()
        return QuadraticNumber(num.a / n, num.b / n, disc)

    def __rtruediv__(self, other):
        x, y, _ = self._align(other)
        return y / x

    def __pow__(self, exp: int):
        if exp < 0:
            return (QuadraticNumber(1, 0, self.disc) / self) ** (-exp)
        out = QuadraticNumber(1, 0, self.disc)
        base = self
        while exp:
            if exp & 1:
                out = out * base
            base = base * base
            exp >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadraticNumber):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.disc == other.disc and self.a == other.a and self.b == other.b
        return NotImplemented

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return int(self.a)

    def __repr__(self) -> str:
        return f"QuadraticNumber({self.a}, {self.b}, sqrt {self.disc})"


@dataclass
class SequenceTable:
    """Exact integer sequence values T_0..T_k with a human-readable label."""

    label: str
    values: list[int]

    def items(self) -> list[tuple[int, int]]:
        return list(enumerate(self.values))


def tree_count(ks: Sequence[int]) -> int:
    """Spanning trees of the polygon stack (k_1, ..., k_n).

    Uses the two-term recurrence T(k_1..k_n) = k_n*T(k_1..k_{n-1}) -
    T(k_1..k_{n-2}) seeded with T() = 1 and T(k_1) = k_1.
    """
    spec = check_stack_spec(ks)
    prev2, prev = 0, 1  # virtual T at length -1, then T of the empty stack
    for k in spec:
        prev2, prev = prev, k * prev - prev2
    return prev


def forest_count(ks: Sequence[int]) -> int:
    """Spanning forests of the stack rooted at the top attachment pair:
    F(spec) = T(spec) - T(spec minus last entry)."""
    spec = check_stack_spec(ks)
    if not spec:
        raise ValueError("forest count needs a nonempty stack spec")
    return tree_count(spec) - tree_count(spec[:-1])


def constant_k_table(k: int, n_max: int) -> SequenceTable:
    """T_0..T_{n_max} for a stack of n k-gons: T_n = k*T_{n-1} - T_{n-2}."""
    if k < 2:
        raise ValueError(f"polygon size must be >= 2, got {k}")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    vals = [1, k]
    while len(vals) <= n_max:
        vals.append(k * vals[-1] - vals[-2])
    return SequenceTable(f"T(k={k})", vals[: n_max + 1])


def constant_k_closed_form(k: int, n: int) -> int:
    """Closed form for the constant-k tree counts, evaluated exactly with
    sqrt(k^2 - 4); the irrational parts cancel and an integer comes out."""
    if k < 3:
        raise ValueError("closed form needs k >= 3 (k = 2 degenerates the discriminant)")
    if n < 0:
        raise ValueError("n must be nonnegative")
    d = k * k - 4
    alpha = QuadraticNumber(Fraction(k, 2), Fraction(1, 2), d)   # (k + sqrt(d)) / 2
    beta = QuadraticNumber(Fraction(k, 2), Fraction(-1, 2), d)
    k_over_sqrt = QuadraticNumber(0, Fraction(k, d), d)          # k/sqrt(d) = k*sqrt(d)/d
    one = QuadraticNumber(1, 0, d)
    total = (one + k_over_sqrt) * alpha ** n + (one - k_over_sqrt) * beta ** n
    return (total * Fraction(1, 2)).as_integer()


def house_closed_form(n: int) -> int:
    """Tree counts of the n-story house (3,4,4,...): T_0 = 3, T_1 = 11."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    d = 3
    front = QuadraticNumber(0, Fraction(1, 6), d)  # 1/(2*sqrt(3)) = sqrt(3)/6
    plus = QuadraticNumber(5, 3, d)   # 3*sqrt(3) + 5
    minus = QuadraticNumber(-5, 3, d)  # 3*sqrt(3) - 5
    grow = QuadraticNumber(2, 1, d)
    shrink = QuadraticNumber(2, -1, d)
    value = front * (plus * grow ** n + minus * shrink ** n)
    return value.as_integer()


def alternating_tables(k1: int, k2: int, n_max: int) -> tuple[SequenceTable, SequenceTable]:
    """Tree counts of alternating stacks.

    A_n counts the stack with n k1-gons and n k2-gons alternating
    (starting with k1); B_n the stack with n k1-gons and n-1 k2-gons.
    Built from the coupled pair A_n = k2*B_n - A_{n-1} and
    B_n = k1*A_{n-1} - B_{n-1}; the decoupled recurrence
    X_n = (k1*k2 - 2)*X_{n-1} - X_{n-2} is checked as we go.
    """
    if k1 < 2 or k2 < 2:
        raise ValueError(f"polygon sizes must be >= 2, got ({k1},{k2})")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    a_vals = [1]
    b_vals = [0]
    for n in range(1, n_max + 1):
        b = k1 * a_vals[n - 1] - b_vals[n - 1]
        a = k2 * b - a_vals[n - 1]
        if n >= 2:
            coeff = k1 * k2 - 2
            assert a == coeff * a_vals[n - 1] - a_vals[n - 2]
            assert b == coeff * b_vals[n - 1] - b_vals[n - 2]
        a_vals.append(a)
        b_vals.append(b)
    return (
        SequenceTable(f"A(k1={k1},k2={k2})", a_vals),
        SequenceTable(f"B(k1={k1},k2={k2})", b_vals),
    )
