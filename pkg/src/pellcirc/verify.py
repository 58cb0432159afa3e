"""Named verification checks: every library invariant, run up to a cap.

Each check pits one route against an independent one (closed form vs
elimination oracle, recurrence vs quadratic-ring powers, exact product vs
DFT) and reports pass/fail.  Randomized checks use a fixed seed so a
verify run is reproducible.  Oracle-bound checks cap themselves (inverses
at n <= 15, determinants at n <= 25, eigen checks at n <= 12) no matter
how large n_max is; checks whose range is empty for a small n_max pass
with a not-applicable note.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import closed_forms as cf
from .circulant import (
    Circulant,
    circ_det_via_eigen,
    circ_eigenvalues,
    circ_expand,
    first_row_of,
    is_circulant,
)
from .linalg import (
    DenseMatrix,
    SingularMatrixError,
    det_rational_elim,
    direct_sum,
    mat_mul,
    oracle_det,
    oracle_inverse,
)
from .sequences import QuadInt, SequenceKind, alpha_power, pell, pell_lucas

EIGEN_CAP = 12
DET_CAP = 25
INV_CAP = 15
BAND_CAP = 12
SEQ_TOP = 200
REL_TOL = 1e-9
NONZERO_TOL = 1e-6


@dataclass(frozen=True)
class CheckResult:
    name: str
    n_range: str
    status: str  # "pass" | "fail"
    detail: str


@dataclass(frozen=True)
class VerifyReport:
    checks: list[CheckResult]
    overall: str  # "pass" iff every check passed

    @property
    def ok(self) -> bool:
        return self.overall == "pass"


def _result(name: str, n_range: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(name=name, n_range=n_range, status="pass" if ok else "fail", detail=detail)


def _not_applicable(name: str, needs: str) -> CheckResult:
    return CheckResult(
        name=name, n_range="-", status="pass", detail=f"skipped: not applicable, needs {needs}"
    )


def _rand_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _rand_matrix(rng: random.Random, n: int, integral: bool = False) -> DenseMatrix:
    if integral:
        entries = [Fraction(rng.randint(-9, 9)) for _ in range(n * n)]
    else:
        entries = [_rand_fraction(rng) for _ in range(n * n)]
    return DenseMatrix(n, n, entries)


# --- sequence checks -------------------------------------------------------

def check_binet_agreement(n_max: int) -> CheckResult:
    for n in range(SEQ_TOP + 1):
        ap = alpha_power(n)
        if ap.b != pell(n) or 2 * ap.a != pell_lucas(n):
            return _result("binet-recurrence-agreement", f"0..{SEQ_TOP}", False, f"mismatch at n={n}")
    return _result("binet-recurrence-agreement", f"0..{SEQ_TOP}", True, "exact in Z[sqrt(2)]")


def check_recurrence_shape(n_max: int) -> CheckResult:
    for n in range(2, SEQ_TOP + 1):
        if pell(n) != 2 * pell(n - 1) + pell(n - 2):
            return _result("recurrence-shape", f"2..{SEQ_TOP}", False, f"pell fails at n={n}")
        if pell_lucas(n) != 2 * pell_lucas(n - 1) + pell_lucas(n - 2):
            return _result("recurrence-shape", f"2..{SEQ_TOP}", False, f"pell-lucas fails at n={n}")
    return _result("recurrence-shape", f"2..{SEQ_TOP}", True, "both sequences")


def check_quadint_norm(n_max: int) -> CheckResult:
    rng = random.Random(101)
    for i in range(100):
        x = QuadInt(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        y = QuadInt(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        if (x * y).norm() != x.norm() * y.norm():
            return _result("quadint-norm-multiplicative", "100 pairs", False, f"pair #{i}")
    return _result("quadint-norm-multiplicative", "100 pairs", True, "|a|,|b| <= 10^6")


def check_alpha_additivity(n_max: int) -> CheckResult:
    rng = random.Random(102)
    for i in range(40):
        m, n = rng.randint(0, 50), rng.randint(0, 50)
        if alpha_power(m + n) != alpha_power(m) * alpha_power(n):
            return _result("alpha-power-additivity", "m,n <= 50", False, f"m={m} n={n}")
    return _result("alpha-power-additivity", "m,n <= 50", True, "40 random pairs")


# --- generic linear algebra checks -----------------------------------------

def check_det_multiplicative(n_max: int) -> CheckResult:
    rng = random.Random(201)
    for i in range(20):
        n = rng.randint(1, 6)
        a, b = _rand_matrix(rng, n), _rand_matrix(rng, n)
        if oracle_det(mat_mul(a, b)) != oracle_det(a) * oracle_det(b):
            return _result("det-multiplicative", "n <= 6", False, f"case #{i}")
    return _result("det-multiplicative", "n <= 6", True, "20 random pairs")


def check_inverse_roundtrip(n_max: int) -> CheckResult:
    rng = random.Random(202)
    done = 0
    for _ in range(60):
        n = rng.randint(1, 6)
        a = _rand_matrix(rng, n)
        try:
            inv = oracle_inverse(a)
        except SingularMatrixError:
            continue
        if mat_mul(a, inv) != DenseMatrix.identity(n) or mat_mul(inv, a) != DenseMatrix.identity(n):
            return _result("inverse-roundtrip", "n <= 6", False, "product not identity")
        done += 1
    ok = done >= 20
    return _result("inverse-roundtrip", "n <= 6", ok, f"{done} invertible cases")


def check_det_direct_sum(n_max: int) -> CheckResult:
    rng = random.Random(203)
    for i in range(20):
        a = _rand_matrix(rng, rng.randint(1, 4))
        b = _rand_matrix(rng, rng.randint(1, 4))
        if oracle_det(direct_sum(a, b)) != oracle_det(a) * oracle_det(b):
            return _result("det-direct-sum", "n <= 4 blocks", False, f"case #{i}")
    return _result("det-direct-sum", "n <= 4 blocks", True, "20 random pairs")


def check_bareiss_vs_rational(n_max: int) -> CheckResult:
    rng = random.Random(204)
    for i in range(50):
        n = rng.randint(1, 8)
        a = _rand_matrix(rng, n, integral=True)
        if oracle_det(a) != det_rational_elim(a):
            return _result("bareiss-vs-rational-elim", "n <= 8", False, f"case #{i}")
    return _result("bareiss-vs-rational-elim", "n <= 8", True, "50 random integer matrices")


# --- circulant checks ------------------------------------------------------

def check_expand_roundtrip(n_max: int) -> CheckResult:
    top = min(n_max, EIGEN_CAP)
    for n in range(1, top + 1):
        for c in (cf.pell_circulant(n), cf.pell_lucas_circulant(n)):
            if first_row_of(circ_expand(c)) != c:
                return _result("expand-first-row-roundtrip", f"1..{top}", False, f"n={n}")
    return _result("expand-first-row-roundtrip", f"1..{top}", True, "both sequences")


def check_eigen_det(n_max: int) -> CheckResult:
    top = min(n_max, EIGEN_CAP)
    for n in range(3, top + 1):
        for c in (cf.pell_circulant(n), cf.pell_lucas_circulant(n)):
            exact = oracle_det(circ_expand(c))
            approx = circ_det_via_eigen(c)
            if abs(approx.real - exact) / abs(exact) >= REL_TOL:
                return _result("eigen-det-cross-check", f"3..{top}", False, f"n={n} real part")
            if abs(approx.imag) / abs(exact) >= REL_TOL:
                return _result("eigen-det-cross-check", f"3..{top}", False, f"n={n} imaginary part")
    return _result(
        "eigen-det-cross-check",
        f"3..{top}",
        True,
        f"relative error < {REL_TOL}; capped at n={EIGEN_CAP}, doubles run out beyond",
    )


def check_circulant_algebra(n_max: int) -> CheckResult:
    rng = random.Random(301)
    for i in range(15):
        n = rng.randint(1, 8)
        a = Circulant([_rand_fraction(rng) for _ in range(n)])
        b = Circulant([_rand_fraction(rng) for _ in range(n)])
        ab = mat_mul(circ_expand(a), circ_expand(b))
        ba = mat_mul(circ_expand(b), circ_expand(a))
        if ab != ba or not is_circulant(ab):
            return _result("circulant-algebra-closure", "n <= 8", False, f"case #{i}")
    return _result("circulant-algebra-closure", "n <= 8", True, "products commute, stay circulant")


def check_inverse_is_circulant(n_max: int) -> CheckResult:
    top = min(n_max, 10)
    for n in range(3, top + 1):
        for c in (cf.pell_circulant(n), cf.pell_lucas_circulant(n)):
            if not is_circulant(oracle_inverse(circ_expand(c))):
                return _result("inverse-is-circulant", f"3..{top}", False, f"n={n}")
    return _result("inverse-is-circulant", f"3..{top}", True, "oracle inverses keep the structure")


# --- closed-form checks ----------------------------------------------------

def check_det_closed_vs_oracle(n_max: int) -> CheckResult:
    top = min(n_max, DET_CAP)
    cases = 0
    for n in range(3, top + 1):
        if cf.det_pell_closed(n) != oracle_det(circ_expand(cf.pell_circulant(n))):
            return _result("det-closed-vs-oracle", f"3..{top}", False, f"pell n={n}")
        if cf.det_pell_lucas_closed(n) != oracle_det(circ_expand(cf.pell_lucas_circulant(n))):
            return _result("det-closed-vs-oracle", f"3..{top}", False, f"pell-lucas n={n}")
        cases += 2
    return _result("det-closed-vs-oracle", f"3..{top}", True, f"{cases} exact integer matches")


def check_inverse_closed_exact(n_max: int) -> CheckResult:
    top = min(n_max, INV_CAP)
    for n in range(3, top + 1):
        pl = mat_mul(circ_expand(cf.inv_pell_closed(n)), circ_expand(cf.pell_circulant(n)))
        if pl != DenseMatrix.identity(n):
            return _result("inverse-closed-exact", f"3..{top}", False, f"pell n={n}")
        ql = mat_mul(
            circ_expand(cf.inv_pell_lucas_closed(n)), circ_expand(cf.pell_lucas_circulant(n))
        )
        if ql != DenseMatrix.identity(n):
            return _result("inverse-closed-exact", f"3..{top}", False, f"pell-lucas n={n}")
    return _result("inverse-closed-exact", f"3..{top}", True, "products are exactly identity")


def check_scalar_consistency(n_max: int) -> CheckResult:
    top = min(n_max, DET_CAP)
    for n in range(3, top + 1):
        d = pell(1) - pell(n + 1)
        if d ** (n - 2) * cf.pell_scalars(n).g != cf.det_pell_closed(n):
            return _result("scalar-det-consistency", f"3..{top}", False, f"g_n at n={n}")
        e = pell_lucas(1) - pell_lucas(n + 1)
        if 2 * e ** (n - 2) * cf.pell_lucas_scalars(n).u != cf.det_pell_lucas_closed(n):
            return _result("scalar-det-consistency", f"3..{top}", False, f"u_n at n={n}")
    return _result("scalar-det-consistency", f"3..{top}", True, "dets factor through g_n / u_n")


def check_transform_parity(n_max: int) -> CheckResult:
    top = min(n_max, BAND_CAP)
    if top < 4:
        return _not_applicable("transform-parity", "n >= 4")
    for n in range(4, top + 1):
        want = 1 if n % 4 in (1, 2) else -1
        for label, m in (
            ("M", cf.build_M(n)),
            ("N", cf.build_N(n)),
            ("K", cf.build_K(n)),
            ("L", cf.build_L(n)),
        ):
            if oracle_det(m) != want:
                return _result("transform-parity", f"4..{top}", False, f"{label} at n={n}")
    return _result("transform-parity", f"4..{top}", True, "+1 for n mod 4 in {1,2}, -1 otherwise")


def check_band_reduction(n_max: int) -> CheckResult:
    top = min(n_max, BAND_CAP)
    if top < 4:
        return _not_applicable("band-reduction-and-direct-sum", "n >= 4")
    for n in range(4, top + 1):
        for kind in SequenceKind:
            try:
                cf.hessenberg_factorization(kind, n)
            except cf.IntegrityError as exc:
                return _result(
                    "band-reduction-and-direct-sum", f"4..{top}", False, f"{kind.value} n={n}: {exc}"
                )
    return _result(
        "band-reduction-and-direct-sum", f"4..{top}", True, "band pattern and block split exact"
    )


def check_partial_sum_recurrences(n_max: int) -> CheckResult:
    top = min(n_max, INV_CAP)
    if top < 5:
        return _not_applicable("partial-sum-recurrences", "n >= 5")
    for n in range(5, top + 1):
        d = pell(1) - pell(n + 1)
        pn = pell(n)
        if cf.partial_sum_S(n, 2) - 2 * cf.partial_sum_S(n, 1) != Fraction(pn, d**2):
            return _result("partial-sum-recurrences", f"5..{top}", False, f"order-2 at n={n}")
        for r in range(1, n - 3):
            lhs = (
                cf.partial_sum_S(n, r + 2)
                - 2 * cf.partial_sum_S(n, r + 1)
                - cf.partial_sum_S(n, r)
            )
            if lhs != Fraction(pn ** (r + 1), d ** (r + 2)):
                return _result("partial-sum-recurrences", f"5..{top}", False, f"r={r} at n={n}")
    return _result("partial-sum-recurrences", f"5..{top}", True, "exact rational identities")


def check_inverse_tail_geometric(n_max: int) -> CheckResult:
    top = min(n_max, INV_CAP)
    if top < 4:
        return _not_applicable("inverse-tail-geometric", "n >= 4")
    for n in range(4, top + 1):
        row = cf.inv_pell_closed(n).first_row
        ratio = cf.pell_scalars(n).ratio
        if any(row[i + 1] != row[i] * ratio for i in range(2, n - 1)):
            return _result("inverse-tail-geometric", f"4..{top}", False, f"pell n={n}")
        rowq = cf.inv_pell_lucas_closed(n).first_row
        ratioq = cf.pell_lucas_scalars(n).ratio
        if any(rowq[i + 1] != rowq[i] * ratioq for i in range(2, n - 1)):
            return _result("inverse-tail-geometric", f"4..{top}", False, f"pell-lucas n={n}")
    return _result("inverse-tail-geometric", f"4..{top}", True, "entries 3..n form a geometric run")


def check_symbols(n_max: int) -> CheckResult:
    top = min(n_max, EIGEN_CAP)
    if top < 5:
        return _not_applicable("symbol-eigenvalues", "n >= 5")
    smallest = float("inf")
    for n in range(5, top + 1):
        lam = circ_eigenvalues(cf.pell_circulant(n))
        lamq = circ_eigenvalues(cf.pell_lucas_circulant(n))
        for k in range(1, n):
            su, sv = cf.symbol_u(n, k), cf.symbol_v(n, k)
            smallest = min(smallest, abs(su), abs(sv))
            if abs(su) <= NONZERO_TOL or abs(sv) <= NONZERO_TOL:
                return _result("symbol-eigenvalues", f"5..{top}", False, f"vanishing at n={n} k={k}")
            if abs(su - lam[k]) / abs(lam[k]) >= REL_TOL:
                return _result("symbol-eigenvalues", f"5..{top}", False, f"u mismatch n={n} k={k}")
            if abs(sv - lamq[k]) / abs(lamq[k]) >= REL_TOL:
                return _result("symbol-eigenvalues", f"5..{top}", False, f"v mismatch n={n} k={k}")
    return _result(
        "symbol-eigenvalues",
        f"5..{top}",
        True,
        f"match DFT eigenvalues; min magnitude {smallest:.4g}",
    )


def check_bidiagonal_inverse(n_max: int) -> CheckResult:
    top = min(n_max + 2, 52)  # bidiagonal order n-2 capped at 50
    for n in range(3, top + 1):
        order = n - 2
        dP = pell(1) - pell(n + 1)
        c = cf._lower_bidiagonal(order, dP, -pell(n))
        if cf.bidiagonal_inverse_pell(n) != oracle_inverse(c):
            return _result("bidiagonal-closed-inverse", f"orders 1..{top - 2}", False, f"pell n={n}")
        eQ = pell_lucas(1) - pell_lucas(n + 1)
        a = cf._lower_bidiagonal(order, eQ, 2 - pell_lucas(n))
        if cf.bidiagonal_inverse_pell_lucas(n) != oracle_inverse(a):
            return _result(
                "bidiagonal-closed-inverse", f"orders 1..{top - 2}", False, f"pell-lucas n={n}"
            )
    return _result("bidiagonal-closed-inverse", f"orders 1..{top - 2}", True, "exact equality")


def check_hankel_block_inverse(n_max: int) -> CheckResult:
    top = min(n_max, BAND_CAP)
    if top < 4:
        return _not_applicable("hankel-block-inverse", "n >= 4")
    for n in range(4, top + 1):
        if cf.hankel_block_inverse_M(n) != oracle_inverse(cf.build_M(n)):
            return _result("hankel-block-inverse", f"4..{top}", False, f"M at n={n}")
        if cf.hankel_block_inverse_K(n) != oracle_inverse(cf.build_K(n)):
            return _result("hankel-block-inverse", f"4..{top}", False, f"K at n={n}")
    return _result("hankel-block-inverse", f"4..{top}", True, "block assembly equals elimination")


ALL_CHECKS = [
    check_binet_agreement,
    check_recurrence_shape,
    check_quadint_norm,
    check_alpha_additivity,
    check_det_multiplicative,
    check_inverse_roundtrip,
    check_det_direct_sum,
    check_bareiss_vs_rational,
    check_expand_roundtrip,
    check_eigen_det,
    check_circulant_algebra,
    check_inverse_is_circulant,
    check_det_closed_vs_oracle,
    check_inverse_closed_exact,
    check_scalar_consistency,
    check_transform_parity,
    check_band_reduction,
    check_partial_sum_recurrences,
    check_inverse_tail_geometric,
    check_symbols,
    check_bidiagonal_inverse,
    check_hankel_block_inverse,
]


def run_verify(n_max: int) -> VerifyReport:
    """Run every named check capped at n_max (which must be >= 3)."""
    if n_max < 3:
        raise ValueError(f"n_max must be >= 3, got {n_max}")
    results = [check(n_max) for check in ALL_CHECKS]
    overall = "pass" if all(r.status == "pass" for r in results) else "fail"
    return VerifyReport(checks=results, overall=overall)
