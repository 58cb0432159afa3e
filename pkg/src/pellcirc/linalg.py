"""Dense exact linear algebra over rationals.

Everything here is generic and structure-blind on purpose: these routines
are the independent oracle the closed forms are measured against, so they
never peek at circulant or band structure.  Pivoting takes the first
nonzero entry scanning down the column; arithmetic is exact, so there is
no stability reason to prefer large pivots, and the deterministic choice
keeps sign bookkeeping easy to test.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


class ShapeError(ValueError):
    """Matrix dimensions incompatible with the requested operation."""


class SingularMatrixError(ArithmeticError):
    """Inversion hit a zero column; `pivot` is the 0-based column index."""

    def __init__(self, pivot: int) -> None:
        super().__init__(f"matrix is singular: no pivot in column {pivot}")
        self.pivot = pivot


class DenseMatrix:
    """Row-major matrix of Fractions with exact equality."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        if rows < 1 or cols < 1:
            raise ShapeError(f"matrix must be at least 1x1, got {rows}x{cols}")
        data = [x if isinstance(x, Fraction) else Fraction(x) for x in entries]
        if len(data) != rows * cols:
            raise ShapeError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> DenseMatrix:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), width, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> DenseMatrix:
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> DenseMatrix:
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Fraction]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, tuple(self.entries)))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(x) for x in self.row(i)) for i in range(self.rows)
        )
        return f"DenseMatrix({self.rows}x{self.cols}: {body})"


def mat_mul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Exact product a @ b."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    brows = b.to_rows()
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        acc = [Fraction(0)] * b.cols
        for k, aik in enumerate(arow):
            if aik == 0:
                continue
            brow = brows[k]
            for j in range(b.cols):
                acc[j] += aik * brow[j]
        out.extend(acc)
    return DenseMatrix(a.rows, b.cols, out)


def direct_sum(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Block-diagonal diag(a, b) with zero off-blocks."""
    rows = a.rows + b.rows
    cols = a.cols + b.cols
    out = DenseMatrix.zeros(rows, cols)
    for i in range(a.rows):
        out.entries[i * cols : i * cols + a.cols] = a.row(i)
    for i in range(b.rows):
        start = (a.rows + i) * cols + a.cols
        out.entries[start : start + b.cols] = b.row(i)
    return out


def oracle_det(m: DenseMatrix) -> Fraction:
    """Exact determinant via fraction-free (Bareiss) elimination.

    Each row is scaled to integers by the lcm of its denominators first;
    the scale factors divide back out at the end.
    """
    if not m.is_square():
        raise ShapeError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    scale = Fraction(1)
    a: list[list[int]] = []
    for i in range(n):
        row = m.row(i)
        d = lcm(*(x.denominator for x in row))
        scale *= d
        a.append([int(x * d) for x in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1]) / scale


def det_rational_elim(m: DenseMatrix) -> Fraction:
    """Exact determinant by plain Gaussian elimination over Fractions.

    Second, independent route used to cross-check oracle_det.
    """
    if not m.is_square():
        raise ShapeError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    a = m.to_rows()
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] * inv
            if f == 0:
                continue
            for j in range(k, n):
                a[r][j] -= f * a[k][j]
    return det


def oracle_inverse(m: DenseMatrix) -> DenseMatrix:
    """Exact inverse by Gauss-Jordan; raises SingularMatrixError if rank-deficient."""
    if not m.is_square():
        raise ShapeError(f"inverse needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    a = [m.row(i) + DenseMatrix.identity(n).row(i) for i in range(n)]
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            raise SingularMatrixError(k)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for r in range(n):
            if r == k or a[r][k] == 0:
                continue
            f = a[r][k]
            a[r] = [x - f * y for x, y in zip(a[r], a[k])]
    return DenseMatrix(n, n, [x for row in a for x in row[n:]])
