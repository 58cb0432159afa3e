"""Circulant matrices: expansion, DFT eigenvalues, structure detection.

A circulant is stored as its first row c_0..c_{n-1}; every later row is
the cyclic right-shift of the one above.  This module is index-agnostic:
whatever offset a caller bakes into the first row is the caller's
business.  Eigenvalues are a floating-point cross-check only, computed by
direct O(n^2) DFT summation; nothing exact ever depends on them.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Iterable

from .linalg import DenseMatrix, ShapeError


class Circulant:
    """Circulant matrix, represented by its first row."""

    __slots__ = ("first_row",)

    def __init__(self, first_row: Iterable) -> None:
        row = tuple(x if isinstance(x, Fraction) else Fraction(x) for x in first_row)
        if not row:
            raise ValueError("first row must have at least one entry")
        self.first_row = row

    @property
    def order(self) -> int:
        return len(self.first_row)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Circulant):
            return NotImplemented
        return self.first_row == other.first_row

    def __hash__(self) -> int:
        return hash(self.first_row)

    def __repr__(self) -> str:
        return f"Circulant({list(self.first_row)})"


def circ_expand(c: Circulant) -> DenseMatrix:
    """Dense n x n expansion: entry (i, j) = first_row[(j - i) mod n]."""
    n = c.order
    row = c.first_row
    return DenseMatrix(n, n, [row[(j - i) % n] for i in range(n) for j in range(n)])


def first_row_of(m: DenseMatrix) -> Circulant:
    """Read a Circulant back off a dense matrix's first row (no structure check)."""
    return Circulant(m.row(0))


def circ_eigenvalues(c: Circulant) -> list[complex]:
    """Eigenvalues lambda_j = sum_k c_k w^(jk), w = exp(2*pi*i/n), j = 0..n-1.

    Raises OverflowError if an entry does not fit in a double.
    """
    n = c.order
    coeffs = [float(x) for x in c.first_row]
    # w^(jk) depends only on jk mod n; the table keeps angles small and exact
    powers = [cmath.exp(2j * cmath.pi * t / n) for t in range(n)]
    return [
        sum(ck * powers[j * k % n] for k, ck in enumerate(coeffs)) + 0j
        for j in range(n)
    ]


def circ_det_via_eigen(c: Circulant) -> complex:
    """Product of DFT eigenvalues; approximate, for cross-checking only."""
    det = complex(1)
    for lam in circ_eigenvalues(c):
        det *= lam
    return det


def is_circulant(m: DenseMatrix) -> bool:
    """True iff every row is the exact cyclic right-shift of the previous one."""
    if not m.is_square():
        raise ShapeError(f"circulant test needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    prev = m.row(0)
    for i in range(1, n):
        cur = m.row(i)
        if cur != [prev[-1]] + prev[:-1]:
            return False
        prev = cur
    return True
