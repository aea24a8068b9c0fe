"""Exact-arithmetic helpers and the independent elimination oracles."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

from qdisk import intmat
from qdisk.oracles import det_bareiss, rank_mod2, rank_rational, solve_rational


def _det_leibniz(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = sign
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def _random_matrix(rng, rows, cols, lo=-3, hi=3):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def test_det_bareiss_against_leibniz():
    rng = random.Random(1)
    for n in (1, 2, 3, 4, 5):
        for _ in range(20):
            m = _random_matrix(rng, n, n)
            assert det_bareiss(m) == _det_leibniz(m)


def test_rank_rational_against_minors():
    rng = random.Random(2)
    for _ in range(40):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = _random_matrix(rng, rows, cols, -2, 2)
        # oracle: largest size of a nonsingular square minor
        best = 0
        from itertools import combinations

        for size in range(1, min(rows, cols) + 1):
            for rsel in combinations(range(rows), size):
                for csel in combinations(range(cols), size):
                    sub = [[m[r][c] for c in csel] for r in rsel]
                    if _det_leibniz(sub) != 0:
                        best = max(best, size)
        assert rank_rational(m) == best


def test_rank_mod2_against_minors():
    rng = random.Random(3)
    from itertools import combinations

    for _ in range(40):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = [[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)]
        best = 0
        for size in range(1, min(rows, cols) + 1):
            for rsel in combinations(range(rows), size):
                for csel in combinations(range(cols), size):
                    sub = [[m[r][c] for c in csel] for r in rsel]
                    if _det_leibniz(sub) % 2 == 1:
                        best = max(best, size)
        assert rank_mod2(m) == best


def test_solve_rational_roundtrip():
    rng = random.Random(4)
    for _ in range(40):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = _random_matrix(rng, rows, cols, -2, 2)
        x = [rng.randint(-3, 3) for _ in range(cols)]
        v = [sum(m[i][j] * x[j] for j in range(cols)) for i in range(rows)]
        sol = solve_rational(m, v)
        assert sol is not None
        assert all(
            sum(Fraction(m[i][j]) * sol[j] for j in range(cols)) == v[i] for i in range(rows)
        )


def test_solve_rational_rejects_inconsistent():
    assert solve_rational([[1, 1], [1, 1]], [0, 1]) is None
    assert solve_rational([[2, 0], [0, 0]], [1, 1]) is None


def test_matrix_helpers():
    a = [[1, 2], [3, 4]]
    assert intmat.transpose(a) == [[1, 3], [2, 4]]
    assert intmat.matmul(a, intmat.identity(2)) == a
    assert intmat.rect_identity(2, 3) == [[1, 0, 0], [0, 1, 0]]
    assert intmat.shape(intmat.zeros(2, 3)) == (2, 3)
    assert intmat.entries_within([[1, 0], [-1, 1]])
    assert not intmat.entries_within([[2]])
    assert intmat.is_lower_triangular([[1, 0], [5, -1]])
    assert intmat.is_upper_triangular([[1, 7], [0, -1]])


def test_triangular_solvers():
    rng = random.Random(6)
    for n in (1, 2, 3, 5):
        low = [[rng.randint(-1, 1) for _ in range(i)] + [rng.choice((1, -1))] + [0] * (n - i - 1) for i in range(n)]
        x = [rng.randint(-4, 4) for _ in range(n)]
        v = intmat.matvec(low, x)
        assert intmat.solve_lower_unit(low, v) == x
        up = intmat.transpose(low)
        v2 = intmat.matvec(up, x)
        assert intmat.solve_upper_unit(up, v2) == x
