"""Independent exact linear-algebra oracles.

These deliberately share no code with the factorization path: determinants
use fraction-free Bareiss elimination, ranks use Gaussian elimination over
the rationals and over GF(2), and solvability uses plain rational row
reduction.  They exist to cross-check the triangular factorization.
"""

from __future__ import annotations

from fractions import Fraction

from .intmat import Matrix, copy, shape


def det_bareiss(a: Matrix) -> int:
    """Exact determinant of a square integer matrix via Bareiss elimination."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("det_bareiss needs a square matrix")
    if n == 0:
        return 1
    m = copy(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _echelon_fractions(a: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    rows, cols = shape(a)
    m = [[Fraction(x) for x in row] for row in a]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank_rational(a: Matrix) -> int:
    """Rank over the rationals."""
    return len(_echelon_fractions(a)[1])


def rank_mod2(a: Matrix) -> int:
    """Rank over GF(2), with rows packed into integers."""
    rows = [sum((x & 1) << j for j, x in enumerate(row)) for row in a]
    rank = 0
    for c in range(shape(a)[1]):
        bit = 1 << c
        pr = next((i for i in range(rank, len(rows)) if rows[i] & bit), None)
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & bit:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def solve_rational(a: Matrix, v: list[int]) -> list[Fraction] | None:
    """One rational solution of a x = v, or None when the system is inconsistent.

    Free variables are set to zero.
    """
    rows, cols = shape(a)
    if len(v) != rows:
        raise ValueError("right-hand side length mismatch")
    aug = [row[:] + [v[i]] for i, row in enumerate(a)]
    m, pivots = _echelon_fractions(aug)
    x = [Fraction(0)] * cols
    for r, c in enumerate(pivots):
        if c == cols:  # pivot in the augmented column
            return None
        x[c] = m[r][cols]
    # rows below the pivot rows must be consistent
    for r in range(len(pivots), rows):
        if m[r][cols] != 0:
            return None
    # verify: echelon bookkeeping above already zeroed the pivot columns
    for i in range(rows):
        if sum(Fraction(a[i][j]) * x[j] for j in range(cols)) != v[i]:
            return None
    return x
