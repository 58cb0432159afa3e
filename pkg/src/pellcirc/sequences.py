"""Pell and Pell-Lucas numbers, by recurrence and by exact arithmetic in Z[sqrt(2)].

Both sequences satisfy x_n = 2*x_{n-1} + x_{n-2}; Pell starts 0, 1 and
Pell-Lucas starts 2, 2.  The recurrence is the primary generator; QuadInt
powers of 1 + sqrt(2) give a second, independent route to the same values
(the coefficient of sqrt(2) in (1+sqrt(2))**n is P_n, twice the rational
part is Q_n).
"""
from __future__ import annotations

import enum


class SequenceKind(enum.Enum):
    """Selects between the Pell and Pell-Lucas pipelines."""

    PELL = "pell"
    PELL_LUCAS = "pell-lucas"


class QuadInt:
    """An element a + b*sqrt(2) of the ring Z[sqrt(2)], exact."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int) -> None:
        self.a = a
        self.b = b

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadInt):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __add__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.a, -self.b)

    def __mul__(self, other: QuadInt) -> QuadInt:
        # (a1 + b1*r)(a2 + b2*r) with r*r = 2
        return QuadInt(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __pow__(self, n: int) -> QuadInt:
        if n < 0:
            raise ValueError("negative power not supported")
        result = QuadInt(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> QuadInt:
        return QuadInt(self.a, -self.b)

    def norm(self) -> int:
        """Field norm a**2 - 2*b**2; multiplicative."""
        return self.a * self.a - 2 * self.b * self.b


ALPHA = QuadInt(1, 1)  # 1 + sqrt(2), root of x**2 - 2x - 1
BETA = QuadInt(1, -1)  # its conjugate


def _unroll(x0: int, x1: int, count: int) -> list[int]:
    """First `count` terms of x_n = 2*x_{n-1} + x_{n-2}."""
    out = [x0, x1][:count]
    while len(out) < count:
        out.append(2 * out[-1] + out[-2])
    return out


def pell(n: int) -> int:
    """n-th Pell number (P0=0, P1=1, P4=12, ...)."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    return _unroll(0, 1, n + 1)[n]


def pell_lucas(n: int) -> int:
    """n-th Pell-Lucas number (Q0=2, Q1=2, Q3=14, ...)."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    return _unroll(2, 2, n + 1)[n]


def alpha_power(n: int) -> QuadInt:
    """(1 + sqrt(2))**n as an exact QuadInt, by squaring.

    The result (a, b) carries both sequences at once: b == pell(n) and
    2*a == pell_lucas(n).
    """
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    return ALPHA**n


def sequence_prefix(kind: SequenceKind, n: int) -> list[int]:
    """[P_1..P_n] or [Q_1..Q_n], the first row of the order-n circulant."""
    if n < 1:
        raise ValueError(f"count must be >= 1, got {n}")
    if kind is SequenceKind.PELL:
        return _unroll(0, 1, n + 1)[1:]
    return _unroll(2, 2, n + 1)[1:]
