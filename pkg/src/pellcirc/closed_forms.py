"""Closed forms for Pell / Pell-Lucas circulants.

The order-n Pell circulant has first row P_1..P_n, the Pell-Lucas one
Q_1..Q_n.  Two quantities drive everything:

    d = P_1 - P_{n+1}   (Pell side: diagonal of the reduced band matrix)
    e = Q_1 - Q_{n+1}   (Pell-Lucas side)

Determinants come out of a two-sided transform left * C * right that
squashes the circulant to a Hessenberg matrix whose nonzeros live in the
first two rows, the diagonal (d resp. e) and the subdiagonal (-P_n resp.
2 - Q_n).  A further unit upper-triangular column operation splits that
into diag(1, g_n) [+] bidiagonal (Pell) or diag(2, u_n) [+] bidiagonal
(Pell-Lucas), which is where the scalars g_n and u_n and the inverse
first rows are read off.

All arithmetic here is exact: d and e are negative and their powers
alternate sign, which floating point would happily smear over.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .circulant import Circulant, circ_expand
from .linalg import DenseMatrix, direct_sum, mat_mul
from .sequences import SequenceKind, _unroll


class IntegrityError(RuntimeError):
    """A factorization product disagreed with its expected structure.

    Firing means an implementation bug, never a runtime condition;
    `row`/`col` are the 0-based coordinates of the first offending entry.
    """

    def __init__(self, what: str, row: int, col: int, got, want) -> None:
        super().__init__(f"{what}: entry ({row}, {col}) is {got}, expected {want}")
        self.row = row
        self.col = col


@dataclass(frozen=True)
class PellScalars:
    """g_n, g'_n and the geometric ratio P_n / (P_1 - P_{n+1}) for order n."""

    n: int
    g: Fraction
    g_prime: Fraction
    ratio: Fraction


@dataclass(frozen=True)
class PellLucasScalars:
    """u_n, u'_n and the ratio (Q_n - 2) / (Q_1 - Q_{n+1}) for order n."""

    n: int
    u: Fraction
    u_prime: Fraction
    ratio: Fraction


@dataclass(frozen=True)
class FactorizationBundle:
    """The five matrices of one band-reduction: left*C*right = hessenberg,
    hessenberg*column_op = block (a verified direct sum)."""

    left: DenseMatrix
    right: DenseMatrix
    hessenberg: DenseMatrix
    column_op: DenseMatrix
    block: DenseMatrix


def _require_order(n: int, minimum: int) -> None:
    if n < minimum:
        raise ValueError(f"order must be >= {minimum}, got {n}")


def _pells(top: int) -> list[int]:
    """[P_0 .. P_top]."""
    return _unroll(0, 1, top + 1)


def _pell_lucases(top: int) -> list[int]:
    """[Q_0 .. Q_top]."""
    return _unroll(2, 2, top + 1)


def pell_circulant(n: int) -> Circulant:
    """Order-n circulant with first row P_1..P_n."""
    _require_order(n, 1)
    return Circulant(_pells(n)[1:])


def pell_lucas_circulant(n: int) -> Circulant:
    """Order-n circulant with first row Q_1..Q_n."""
    _require_order(n, 1)
    return Circulant(_pell_lucases(n)[1:])


def sequence_circulant(kind: SequenceKind, n: int) -> Circulant:
    if kind is SequenceKind.PELL:
        return pell_circulant(n)
    return pell_lucas_circulant(n)


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------

def det_pell_closed(n: int) -> int:
    """det of the order-n Pell circulant, n >= 3.

    d^(n-2) * (P_1 - 2 P_n)  +  sum_{k=2}^{n-1} P_{k-1} * P_n^(n-k) * d^(k-2)
    with d = P_1 - P_{n+1}.  Linear count of big-integer operations.
    """
    _require_order(n, 3)
    p = _pells(n + 1)
    d = p[1] - p[n + 1]
    pn = p[n]
    acc = (p[1] - 2 * pn) * d ** (n - 2)
    pw_pn = pn ** (n - 2)  # P_n^(n-k), descending
    pw_d = 1  # d^(k-2), ascending
    for k in range(2, n):
        acc += p[k - 1] * pw_pn * pw_d
        if k < n - 1:
            pw_pn //= pn  # exact: pure power of P_n
            pw_d *= d
    return acc


def det_pell_lucas_closed(n: int) -> int:
    """det of the order-n Pell-Lucas circulant, n >= 3.

    2 e^(n-2) (2 - 3 Q_n) + 2 sum_{k=2}^{n-1} (Q_{k+1} - 3 Q_k)
    * (Q_n - 2)^(n-k) * e^(k-2)  with e = 2 - Q_{n+1}.
    """
    _require_order(n, 3)
    q = _pell_lucases(n + 1)
    e = 2 - q[n + 1]
    w = q[n] - 2
    acc = (2 - 3 * q[n]) * e ** (n - 2)
    pw_w = w ** (n - 2)
    pw_e = 1
    for k in range(2, n):
        acc += (q[k + 1] - 3 * q[k]) * pw_w * pw_e
        if k < n - 1:
            pw_w //= w
            pw_e *= e
    return 2 * acc


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

def pell_scalars(n: int) -> PellScalars:
    """g_n = P_1 - 2 P_n + sum_{k=2}^{n-1} P_{k-1} r^(n-k), r = P_n / (P_1 - P_{n+1});
    g'_n the same shape over P_k.  Satisfies (P_1 - P_{n+1})^(n-2) * g_n = det."""
    _require_order(n, 3)
    p = _pells(n + 1)
    ratio = Fraction(p[n], p[1] - p[n + 1])
    g = Fraction(p[1] - 2 * p[n])
    g_prime = Fraction(p[n])
    pw = ratio  # r^(n-k), k descending from n-1
    for k in range(n - 1, 1, -1):
        g += p[k - 1] * pw
        g_prime += p[k] * pw
        pw *= ratio
    return PellScalars(n=n, g=g, g_prime=g_prime, ratio=ratio)


def pell_lucas_scalars(n: int) -> PellLucasScalars:
    """u_n = Q_1 - 3 Q_n + sum_{k=2}^{n-1} (Q_{k+1} - 3 Q_k) r^(n-k),
    u'_n = sum_{k=2}^{n} Q_k r^(n-k), r = (Q_n - 2) / (Q_1 - Q_{n+1}).
    Satisfies Q_1 (Q_1 - Q_{n+1})^(n-2) u_n = det."""
    _require_order(n, 3)
    q = _pell_lucases(n + 1)
    ratio = Fraction(q[n] - 2, q[1] - q[n + 1])
    u = Fraction(q[1] - 3 * q[n])
    u_prime = Fraction(q[n])  # k = n term, r^0
    pw = ratio
    for k in range(n - 1, 1, -1):
        u += (q[k + 1] - 3 * q[k]) * pw
        u_prime += q[k] * pw
        pw *= ratio
    return PellLucasScalars(n=n, u=u, u_prime=u_prime, ratio=ratio)


# ---------------------------------------------------------------------------
# closed-form inverses
# ---------------------------------------------------------------------------

def inv_pell_closed(n: int) -> Circulant:
    """First row (p_1..p_n) of the inverse Pell circulant, n >= 3.

    p_1 = (1 + 2 P_n^(n-3)/d^(n-2) + sum_{k=1}^{n-3} P_{n-k} P_n^(k-1)/d^k) / g_n
    p_2 = (-2 + sum_{k=1}^{n-2} P_{n-k-1} P_n^(k-1)/d^k) / g_n
    p_i = -P_n^(i-3) / (g_n d^(i-2)),  i = 3..n
    """
    _require_order(n, 3)
    p = _pells(n + 1)
    d = p[1] - p[n + 1]
    pn = p[n]
    g = pell_scalars(n).g

    term = Fraction(1, d)  # P_n^(k-1) / d^k
    sum1 = Fraction(0)
    sum2 = Fraction(0)
    for k in range(1, n - 1):
        if k <= n - 3:
            sum1 += p[n - k] * term
        sum2 += p[n - k - 1] * term
        term *= Fraction(pn, d)
    p1 = (1 + Fraction(2 * pn ** (n - 3), d ** (n - 2)) + sum1) / g
    p2 = (-2 + sum2) / g

    row = [p1, p2]
    tail = Fraction(1, d)  # P_n^(i-3) / d^(i-2)
    for _ in range(3, n + 1):
        row.append(-tail / g)
        tail *= Fraction(pn, d)
    return Circulant(row)


def inv_pell_lucas_closed(n: int) -> Circulant:
    """First row (q_1..q_n) of the inverse Pell-Lucas circulant, n >= 3.

    q_1 = (1 - 8 w^(n-3)/e^(n-2)
           + sum_{k=1}^{n-3} (Q_{n-k+2} - 3 Q_{n-k+1}) w^(k-1)/e^k) / u_n
    q_2 = (-3 + sum_{k=1}^{n-2} (Q_{n-k+1} - 3 Q_{n-k}) w^(k-1)/e^k) / u_n
    q_m = 4 w^(m-3) / (u_n e^(m-2)),  m = 3..n
    with w = Q_n - 2, e = Q_1 - Q_{n+1}.
    """
    _require_order(n, 3)
    q = _pell_lucases(n + 1)
    e = q[1] - q[n + 1]
    w = q[n] - 2
    u = pell_lucas_scalars(n).u

    term = Fraction(1, e)  # w^(k-1) / e^k
    sum1 = Fraction(0)
    sum2 = Fraction(0)
    for k in range(1, n - 1):
        if k <= n - 3:
            sum1 += (q[n - k + 2] - 3 * q[n - k + 1]) * term
        sum2 += (q[n - k + 1] - 3 * q[n - k]) * term
        term *= Fraction(w, e)
    q1 = (1 - Fraction(8 * w ** (n - 3), e ** (n - 2)) + sum1) / u
    q2 = (-3 + sum2) / u

    row = [q1, q2]
    tail = Fraction(1, e)  # w^(m-3) / e^(m-2)
    for _ in range(3, n + 1):
        row.append(4 * tail / u)
        tail *= Fraction(w, e)
    return Circulant(row)


def partial_sum_S(n: int, r: int) -> Fraction:
    """S_n^(r) = sum_{k=1}^{r} P_{r-k+1} P_n^(k-1) / d^k for 1 <= r <= n-2.

    These partial sums obey S^(2) - 2 S^(1) = P_n / d^2 and
    S^(r+2) - 2 S^(r+1) - S^(r) = P_n^(r+1) / d^(r+2), which is what turns
    the inverse's tail into a geometric progression.
    """
    _require_order(n, 3)
    if not 1 <= r <= n - 2:
        raise ValueError(f"r must be in 1..{n - 2}, got {r}")
    p = _pells(n + 1)
    d = p[1] - p[n + 1]
    pn = p[n]
    term = Fraction(1, d)
    total = Fraction(0)
    for k in range(1, r + 1):
        total += p[r - k + 1] * term
        term *= Fraction(pn, d)
    return total


# ---------------------------------------------------------------------------
# eigenvalue symbols
# ---------------------------------------------------------------------------

def _root_of_unity(n: int, k: int) -> complex:
    return cmath.exp(2j * cmath.pi * k / n)


def _symbol_denominator(wk: complex) -> complex:
    # 1 - 2x - x^2 has roots -1 +- sqrt(2), both off the unit circle,
    # so this never vanishes at a root of unity.
    return 1 - 2 * wk - wk * wk


def symbol_u(n: int, k: int) -> complex:
    """k-th eigenvalue of the Pell circulant via the rational symbol
    (1 - P_{n+1} - P_n w^k) / (1 - 2 w^k - w^2k), valid for k = 1..n-1."""
    _require_order(n, 3)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in 1..{n - 1}, got {k}")
    p = _pells(n + 1)
    wk = _root_of_unity(n, k)
    return (1 - float(p[n + 1]) - float(p[n]) * wk) / _symbol_denominator(wk)


def symbol_v(n: int, k: int) -> complex:
    """k-th eigenvalue of the Pell-Lucas circulant via
    (2 - Q_{n+1} + (2 - Q_n) w^k) / (1 - 2 w^k - w^2k), k = 1..n-1."""
    _require_order(n, 3)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in 1..{n - 1}, got {k}")
    q = _pell_lucases(n + 1)
    wk = _root_of_unity(n, k)
    return (2 - float(q[n + 1]) + (2 - float(q[n])) * wk) / _symbol_denominator(wk)


# ---------------------------------------------------------------------------
# transform matrices and factorizations
# ---------------------------------------------------------------------------

def _band_left(n: int, corner: int) -> DenseMatrix:
    """The left transform: row 1 = e1, row 2 = corner*e1 + e_n, then rows
    i = 3..n carry the band (+1, -2, -1) at columns n+2-i, n+3-i, n+4-i,
    where a column index of n+1 wraps to column 1 (only row 3 wraps)."""
    m = DenseMatrix.zeros(n, n)

    def put(i: int, j: int, v: int) -> None:  # 1-based
        if j == n + 1:
            j = 1
        m.entries[(i - 1) * n + (j - 1)] = Fraction(v)

    put(1, 1, 1)
    put(2, 1, corner)
    put(2, n, 1)
    for i in range(3, n + 1):
        put(i, n + 2 - i, 1)
        put(i, n + 3 - i, -2)
        put(i, n + 4 - i, -1)
    return m


def _power_right(n: int, ratio: Fraction) -> DenseMatrix:
    """The right transform: row 1 = e1, column 2 holds ratio^(n-i) on row i,
    and rows 2..n-1 carry a single 1 at column n+2-i."""
    m = DenseMatrix.zeros(n, n)
    m.entries[0] = Fraction(1)
    pw = Fraction(1)
    for i in range(n, 1, -1):  # fill ratio^(n-i) bottom-up
        m.entries[(i - 1) * n + 1] = pw
        pw *= ratio
    for i in range(2, n):
        m.entries[(i - 1) * n + (n + 2 - i - 1)] = Fraction(1)
    return m


def build_M(n: int) -> DenseMatrix:
    """Left transform for the Pell circulant (second row -2*e1 + e_n)."""
    _require_order(n, 4)
    return _band_left(n, -2)


def build_K(n: int) -> DenseMatrix:
    """Left transform for the Pell-Lucas circulant (second row -3*e1 + e_n)."""
    _require_order(n, 4)
    return _band_left(n, -3)


def build_N(n: int) -> DenseMatrix:
    """Right transform for the Pell circulant, powers of P_n/(P_1 - P_{n+1})."""
    _require_order(n, 4)
    p = _pells(n + 1)
    return _power_right(n, Fraction(p[n], p[1] - p[n + 1]))


def build_L(n: int) -> DenseMatrix:
    """Right transform for the Pell-Lucas circulant, powers of (Q_n-2)/(Q_1-Q_{n+1})."""
    _require_order(n, 4)
    q = _pell_lucases(n + 1)
    return _power_right(n, Fraction(q[n] - 2, q[1] - q[n + 1]))


def _lower_bidiagonal(order: int, diag: int, sub: int) -> DenseMatrix:
    m = DenseMatrix.zeros(order, order)
    for i in range(order):
        m.entries[i * order + i] = Fraction(diag)
        if i > 0:
            m.entries[i * order + i - 1] = Fraction(sub)
    return m


def _check_hessenberg(h: DenseMatrix, diag: int, sub: int) -> None:
    """Nonzeros only in the first two rows, the diagonal and the first
    subdiagonal; diagonal == diag from row 3 on, subdiagonal == sub from row 4."""
    n = h.rows
    for i in range(2, n):  # 0-based rows 3..n
        for j in range(n):
            got = h[i, j]
            if j == i:
                want = diag
            elif j == i - 1:
                want = sub if i >= 3 else got  # (3,2) carries no band value
            else:
                want = 0
            if got != want:
                raise IntegrityError("band reduction", i, j, got, want)


def _check_equal(what: str, got: DenseMatrix, want: DenseMatrix) -> None:
    if got == want:
        return
    for i in range(want.rows):
        for j in range(want.cols):
            if got[i, j] != want[i, j]:
                raise IntegrityError(what, i, j, got[i, j], want[i, j])


def hessenberg_factorization(kind: SequenceKind, n: int) -> FactorizationBundle:
    """Run the full band reduction for order n >= 4 and verify it exactly.

    Returns left/right transforms, the Hessenberg product left*C*right,
    the unit upper-triangular column operation, and the resulting block
    matrix, checked entrywise against diag(1, g_n) [+] bidiagonal (Pell)
    or diag(2, u_n) [+] bidiagonal (Pell-Lucas).
    """
    _require_order(n, 4)
    if kind is SequenceKind.PELL:
        p = _pells(n + 1)
        left, right = build_M(n), build_N(n)
        diag, sub = p[1] - p[n + 1], -p[n]
        sc = pell_scalars(n)
        head = DenseMatrix.from_rows([[1, 0], [0, sc.g]])
        # column op: row 1 = (1, -g', g'/g * P_{n+1-j} - P_{n+2-j} ...),
        # row 2 = (0, 1, -P_{n+1-j}/g ...), identity below
        col_op = DenseMatrix.identity(n)
        col_op.entries[1] = -sc.g_prime
        for j in range(3, n + 1):
            col_op.entries[j - 1] = sc.g_prime / sc.g * p[n + 1 - j] - p[n + 2 - j]
            col_op.entries[n + j - 1] = Fraction(-p[n + 1 - j]) / sc.g
    else:
        q = _pell_lucases(n + 1)
        left, right = build_K(n), build_L(n)
        diag, sub = q[1] - q[n + 1], 2 - q[n]
        sc = pell_lucas_scalars(n)
        head = DenseMatrix.from_rows([[2, 0], [0, sc.u]])
        col_op = DenseMatrix.identity(n)
        col_op.entries[1] = -sc.u_prime / 2
        for j in range(3, n + 1):
            step = Fraction(q[n + 3 - j] - 3 * q[n + 2 - j])
            col_op.entries[j - 1] = sc.u_prime * step / (2 * sc.u) - Fraction(q[n + 2 - j], 2)
            col_op.entries[n + j - 1] = -step / sc.u

    circ = circ_expand(sequence_circulant(kind, n))
    hess = mat_mul(mat_mul(left, circ), right)
    _check_hessenberg(hess, diag, sub)
    block = mat_mul(hess, col_op)
    want = direct_sum(head, _lower_bidiagonal(n - 2, diag, sub))
    _check_equal("direct-sum split", block, want)
    return FactorizationBundle(
        left=left, right=right, hessenberg=hess, column_op=col_op, block=block
    )


# ---------------------------------------------------------------------------
# bidiagonal and block inverses
# ---------------------------------------------------------------------------

def bidiagonal_inverse_pell(n: int) -> DenseMatrix:
    """Closed-form inverse of the (n-2)x(n-2) bidiagonal with diagonal
    P_1 - P_{n+1} and subdiagonal -P_n: entry (i,j) = P_n^(i-j) / d^(i-j+1)
    for i >= j, zero above the diagonal.  Degenerate 1x1 at n = 3."""
    _require_order(n, 3)
    p = _pells(n + 1)
    return _bidiagonal_inverse(n - 2, p[n], p[1] - p[n + 1])


def bidiagonal_inverse_pell_lucas(n: int) -> DenseMatrix:
    """Same shape with numerator Q_n - 2 and denominator Q_1 - Q_{n+1}."""
    _require_order(n, 3)
    q = _pell_lucases(n + 1)
    return _bidiagonal_inverse(n - 2, q[n] - 2, q[1] - q[n + 1])


def _bidiagonal_inverse(order: int, num: int, den: int) -> DenseMatrix:
    # band entries depend only on i - j; precompute num^t / den^(t+1)
    band = [Fraction(1, den)]
    for _ in range(order - 1):
        band.append(band[-1] * Fraction(num, den))
    m = DenseMatrix.zeros(order, order)
    for i in range(order):
        for j in range(i + 1):
            m.entries[i * order + j] = band[i - j]
    return m


def _hankel_block_inverse(n: int, column: list[Fraction]) -> DenseMatrix:
    """[[1, 0], [column, H]] where H is the (n-1)x(n-1) Hankel block with
    first row [P_{n-1}, ..., P_1] and last column [P_1, 0, ..., 0]^T."""
    p = _pells(n)
    m = DenseMatrix.zeros(n, n)
    m.entries[0] = Fraction(1)
    for i in range(2, n + 1):  # 1-based
        m.entries[(i - 1) * n] = column[i - 2]
    for bi in range(1, n):  # Hankel block, 1-based block coords
        for bj in range(1, n):
            if bi + bj <= n:
                m.entries[bi * n + bj] = Fraction(p[n + 1 - bi - bj])
    return m


def hankel_block_inverse_M(n: int) -> DenseMatrix:
    """Inverse of build_M(n) assembled from its block structure: lower-left
    column (P_n, ..., P_2)^T and the Hankel block of Pell numbers."""
    _require_order(n, 4)
    p = _pells(n + 1)
    return _hankel_block_inverse(n, [Fraction(p[n + 2 - i]) for i in range(2, n + 1)])


def hankel_block_inverse_K(n: int) -> DenseMatrix:
    """Inverse of build_K(n): lower-left column (Q_n/2, ..., Q_2/2)^T and
    the same Hankel block of Pell numbers."""
    _require_order(n, 4)
    q = _pell_lucases(n + 1)
    return _hankel_block_inverse(n, [Fraction(q[n + 2 - i], 2) for i in range(2, n + 1)])
