"""Block elimination and the recursive {0,+1,-1} triangular factorization.

The factorization writes a black-to-white matrix as L * D * U where L and U
are invertible triangular matrices, D is an identity matrix padded with zero
rows and columns, and every entry of every factor is 0, 1 or -1.  One
elimination step peels off the squares removed by cut-and-paste along a good
diagonal; recursion over the pasted components assembles the full factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intmat
from .adjacency import BWMatrix, Labeling, black_to_white, cutpaste_labeling
from .cutpaste import CutPasteResult, cut_and_paste
from .diagonals import Diagonal, canonical_good_diagonal
from .errors import (
    BadLabelingError,
    EntryOutOfRangeError,
    MiddleMismatchError,
    NonSquareError,
    NoRationalSolution,
    SingleSquareError,
    WitnessInvalidError,
)
from .intmat import Matrix


@dataclass(frozen=True)
class DefectiveIdentity:
    """Identity matrix padded with zero rows and columns.

    ``ones`` lists the unit positions; both coordinates are strictly
    increasing, which is exactly the padded-identity staircase shape.
    """

    rows: int
    cols: int
    ones: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for (r1, c1), (r2, c2) in zip(self.ones, self.ones[1:]):
            if not (r1 < r2 and c1 < c2):
                raise ValueError("unit positions must increase in rows and columns")
        for r, c in self.ones:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError("unit position out of range")

    @property
    def rank(self) -> int:
        return len(self.ones)

    def is_identity(self) -> bool:
        return self.rows == self.cols == self.rank

    def to_matrix(self) -> Matrix:
        m = intmat.zeros(self.rows, self.cols)
        for r, c in self.ones:
            m[r][c] = 1
        return m

    def zero_rows(self) -> list[int]:
        used = {r for r, _ in self.ones}
        return [r for r in range(self.rows) if r not in used]


@dataclass(frozen=True)
class LDUFactorization:
    """Exact triangular factorization of a black-to-white matrix."""

    lower: tuple[tuple[int, ...], ...]
    middle: DefectiveIdentity
    upper: tuple[tuple[int, ...], ...]
    labeling: Labeling
    trace: dict

    @property
    def black_count(self) -> int:
        return len(self.labeling[0])

    @property
    def white_count(self) -> int:
        return len(self.labeling[1])

    def lower_list(self) -> Matrix:
        return [list(r) for r in self.lower]

    def upper_list(self) -> Matrix:
        return [list(r) for r in self.upper]

    def product(self) -> Matrix:
        return intmat.matmul(self.lower_list(), intmat.matmul(self.middle.to_matrix(), self.upper_list()))


def block_eliminate(m: Matrix, witness: Matrix, orientation: str, split: tuple[int, int]):
    """One two-sided block elimination.

    ``split`` = (n, n') cuts m into blocks with m11 of shape n x n'.  In the
    column orientation the witness N satisfies m11 N = m12 (n' <= n) and the
    left factor absorbs the first columns; the row orientation is the
    transpose statement with N m11 = m21 (n' >= n).  Returns (left, middle,
    right) with left * middle * right == m exactly.
    """
    n, np_ = split
    rows, cols = intmat.shape(m)
    mm, mp = rows - n, cols - np_
    if mm < 0 or mp < 0:
        raise ValueError("split larger than the matrix")
    m11 = [row[:np_] for row in m[:n]]
    m12 = [row[np_:] for row in m[:n]]
    m21 = [row[:np_] for row in m[n:]]
    m22 = [row[np_:] for row in m[n:]]
    if orientation == "column":
        if np_ > n:
            raise ValueError("column orientation needs n' <= n")
        if intmat.shape(witness) != (np_, mp) and not (np_ == 0 and not witness):
            raise WitnessInvalidError("witness has wrong shape")
        if intmat.matmul(m11, witness) != m12:
            raise WitnessInvalidError("m11 @ witness != m12")
        corr = intmat.matmul(m21, witness)
        mid_block = [[m22[i][j] - corr[i][j] for j in range(mp)] for i in range(mm)]
        left = _assemble(
            intmat.matmul(m11, intmat.rect_identity(np_, n)),
            intmat.zeros(n, mm),
            intmat.matmul(m21, intmat.rect_identity(np_, n)),
            intmat.identity(mm),
            n,
            mm,
            n,
            mm,
        )
        middle = _assemble(
            intmat.rect_identity(n, np_), intmat.zeros(n, mp), intmat.zeros(mm, np_), mid_block, n, mm, np_, mp
        )
        right = _assemble(
            intmat.identity(np_), witness, intmat.zeros(mp, np_), intmat.identity(mp), np_, mp, np_, mp
        )
    elif orientation == "row":
        if np_ < n:
            raise ValueError("row orientation needs n' >= n")
        if intmat.shape(witness) != (mm, n) and not (mm == 0 and not witness):
            raise WitnessInvalidError("witness has wrong shape")
        if intmat.matmul(witness, m11) != m21:
            raise WitnessInvalidError("witness @ m11 != m21")
        corr = intmat.matmul(witness, m12)
        mid_block = [[m22[i][j] - corr[i][j] for j in range(mp)] for i in range(mm)]
        left = _assemble(
            intmat.identity(n), intmat.zeros(n, mm), witness, intmat.identity(mm), n, mm, n, mm
        )
        middle = _assemble(
            intmat.rect_identity(n, np_), intmat.zeros(n, mp), intmat.zeros(mm, np_), mid_block, n, mm, np_, mp
        )
        right = _assemble(
            intmat.matmul(intmat.rect_identity(np_, n), m11),
            intmat.matmul(intmat.rect_identity(np_, n), m12),
            intmat.zeros(mp, np_),
            intmat.identity(mp),
            np_,
            mp,
            np_,
            mp,
        )
    else:
        raise ValueError("orientation must be 'column' or 'row'")
    if intmat.matmul(left, intmat.matmul(middle, right)) != m:
        raise WitnessInvalidError("elimination does not reproduce the matrix")
    return left, middle, right


def _assemble(a: Matrix, b: Matrix, c: Matrix, d: Matrix, ra: int, rc: int, ca: int, cb: int) -> Matrix:
    """Assemble the block matrix [[a, b], [c, d]] with explicit block shapes."""
    out = intmat.zeros(ra + rc, ca + cb)
    for i in range(ra):
        for j in range(ca):
            out[i][j] = a[i][j]
        for j in range(cb):
            out[i][ca + j] = b[i][j]
    for i in range(rc):
        for j in range(ca):
            out[ra + i][j] = c[i][j]
        for j in range(cb):
            out[ra + i][ca + j] = d[i][j]
    return out


@dataclass(frozen=True)
class StepFactors:
    """One elimination step: B == left @ middle @ right, middle carrying B'."""

    left: Matrix
    middle: Matrix
    right: Matrix
    s_b_prime: tuple[int, ...]
    s_w_prime: tuple[int, ...]
    middle_block: Matrix  # adjacency of the pasted disks, black rows
    witness: Matrix


def ldu_step(b_matrix: BWMatrix, d: Diagonal, cp: CutPasteResult) -> StepFactors:
    """Eliminate the removed squares of one cut-and-paste from the matrix.

    The labeling of ``b_matrix`` must put the removed squares first, in
    diagonal order.  When the diagonal squares are white the computation runs
    on the transpose and the factors are transposed back.
    """
    if cp.diag_black:
        left, middle, right, s_rows, s_cols, block, witness = _step_core(b_matrix, cp)
        return StepFactors(left, middle, right, tuple(s_rows), tuple(s_cols), block, witness)
    t = _step_core(b_matrix.transposed(), cp)
    left_t, middle_t, right_t, s_rows, s_cols, block, witness = t
    b, w = b_matrix.rows, b_matrix.cols
    return StepFactors(
        left=intmat.transpose(right_t, cols=b),
        middle=intmat.transpose(middle_t, cols=b) if middle_t else intmat.zeros(b, w),
        right=intmat.transpose(left_t, cols=w),
        s_b_prime=tuple(s_cols),
        s_w_prime=tuple(s_rows),
        middle_block=intmat.transpose(block, cols=b - len(cp.removed_black)),
        witness=witness,
    )


def _step_core(mat: BWMatrix, cp: CutPasteResult):
    """Elimination with the diagonal squares on the rows."""
    rm_rows = list(cp.removed_diagonal)
    rm_cols = list(cp.removed_flanks)
    k = len(rm_rows)
    nc = len(rm_cols)
    if list(mat.row_squares[:k]) != rm_rows:
        raise BadLabelingError("removed diagonal squares must label the first rows in order")
    if list(mat.col_squares[:nc]) != rm_cols:
        raise BadLabelingError("removed flank squares must label the first columns in order")
    rows, cols = mat.rows, mat.cols
    rp, cpn = rows - k, cols - nc
    entries = mat.as_lists()
    # the removed block is lower bidiagonal: flank j touches diagonal squares j and j+1
    for i in range(k):
        for j in range(nc):
            want = 1 if j in (i, i - 1) else 0
            if entries[i][j] != want:
                raise MiddleMismatchError("removed block is not the bidiagonal strip")
    s_rows = [-1 if cp.side_of[sq] == "right" else 1 for sq in mat.row_squares[k:]]
    s_cols = [-1 if cp.side_of[sq] == "right" else 1 for sq in mat.col_squares[nc:]]
    col_pos = {sq: j for j, sq in enumerate(mat.col_squares)}
    witness = intmat.zeros(nc, cpn)
    for i, (_, _, survivor) in enumerate(cp.merges):
        j = col_pos[survivor]
        if j < nc:
            raise BadLabelingError("surviving flank labeled among the removed squares")
        # the survivor column repeats column i of the removed block, up to sign
        for r in range(k):
            if entries[r][j] != (1 if r in (i, i + 1) else 0):
                raise MiddleMismatchError("surviving flank column does not match the strip")
        witness[i][j - nc] = s_cols[j - nc]
    signed = [
        [entries[i][j] * (1 if i < k else s_rows[i - k]) * (1 if j < nc else s_cols[j - nc]) for j in range(cols)]
        for i in range(rows)
    ]
    left, middle, right = block_eliminate(signed, witness, "column", (k, nc))
    block = [row[nc:] for row in middle[k:]]
    _check_middle(mat, cp, k, nc, block)
    # undo the signs: left absorbs S_b', right absorbs S_w'
    for i in range(rp):
        for j in range(rows):
            left[k + i][j] *= s_rows[i]
    for i in range(nc):
        for j in range(cpn):
            right[i][nc + j] *= s_cols[j]
    for i in range(cpn):
        right[nc + i][nc + i] = s_cols[i]
    if k and nc == k - 1:
        left[k - 1][k - 1] = 1  # unbalanced strip leaves a zero column; repair the pivot
    for mtx in (left, right, middle):
        if not intmat.entries_within(mtx):
            raise EntryOutOfRangeError("factor entry outside {-1, 0, 1}")
    product = intmat.matmul(left, intmat.matmul(middle, right))
    if product != mat.as_lists():
        raise WitnessInvalidError("step factors do not reproduce the matrix")
    return left, middle, right, s_rows, s_cols, block, witness


def _check_middle(mat: BWMatrix, cp: CutPasteResult, k: int, nc: int, block: Matrix) -> None:
    """The eliminated middle must be the adjacency of the pasted components."""
    row_sqs = mat.row_squares[k:]
    col_sqs = mat.col_squares[nc:]
    for i, rsq in enumerate(row_sqs):
        ci, s = cp.square_map[rsq]
        comp = cp.components[ci]
        adjacent = set(comp.neighbors(s))
        for j, csq in enumerate(col_sqs):
            cj, t = cp.square_map[csq]
            want = 1 if (ci == cj and t in adjacent) else 0
            if block[i][j] != want:
                raise MiddleMismatchError(
                    f"middle block entry ({i}, {j}) is {block[i][j]}, adjacency says {want}"
                )


def _blockdiag(blocks: list[Matrix], sizes: list[int]) -> Matrix:
    total = sum(sizes)
    out = intmat.zeros(total, total)
    at = 0
    for blk, size in zip(blocks, sizes):
        for i in range(size):
            for j in range(size):
                out[at + i][at + j] = blk[i][j]
        at += size
    return out


def ldu_factorize(disk) -> LDUFactorization:
    """Full recursive factorization of the disk's black-to-white matrix."""
    b, w = disk.color_counts()
    if b == 0 or w == 0:
        raise SingleSquareError("factorization needs both colors; got a degenerate matrix")
    return _factorize(disk)


def _factorize(disk) -> LDUFactorization:
    b, w = disk.color_counts()
    blacks, whites = disk.canonical_labeling()
    if b == 0 or w == 0:
        middle = DefectiveIdentity(b, w, ())
        return LDUFactorization(
            lower=_freeze(intmat.identity(b)),
            middle=middle,
            upper=_freeze(intmat.identity(w)),
            labeling=(blacks, whites),
            trace={"squares": len(disk), "black": b, "white": w, "base": True},
        )
    d = canonical_good_diagonal(disk)
    cp = cut_and_paste(disk, d)
    subs = [_factorize(comp) for comp in cp.components]
    back = {loc: parent for parent, loc in cp.square_map.items()}
    inner_blacks = tuple(back[(ci, s)] for ci, sub in enumerate(subs) for s in sub.labeling[0])
    inner_whites = tuple(back[(ci, s)] for ci, sub in enumerate(subs) for s in sub.labeling[1])
    labeling = cutpaste_labeling(disk, d, cp, (inner_blacks, inner_whites))
    matrix = black_to_white(disk, labeling)
    step = ldu_step(matrix, d, cp)

    bb = b - len(inner_blacks)  # removed rows
    ww = w - len(inner_whites)
    sub_lower = _blockdiag([intmat.identity(bb)] + [s.lower_list() for s in subs], [bb] + [s.black_count for s in subs])
    sub_upper = _blockdiag([intmat.identity(ww)] + [s.upper_list() for s in subs], [ww] + [s.white_count for s in subs])
    lower = intmat.matmul(step.left, sub_lower)
    upper = intmat.matmul(sub_upper, step.right)
    ones = [(i, i) for i in range(min(bb, ww))]
    row_at, col_at = bb, ww
    for sub in subs:
        ones.extend((row_at + r, col_at + c) for r, c in sub.middle.ones)
        row_at += sub.black_count
        col_at += sub.white_count
    middle = DefectiveIdentity(b, w, tuple(ones))

    if not intmat.entries_within(lower) or not intmat.entries_within(upper):
        raise EntryOutOfRangeError("assembled factor entry outside {-1, 0, 1}")
    assert intmat.is_lower_triangular(lower) and intmat.is_upper_triangular(upper)
    if intmat.matmul(lower, intmat.matmul(middle.to_matrix(), upper)) != matrix.as_lists():
        raise WitnessInvalidError("assembled factorization does not reproduce the matrix")
    trace = {
        "squares": len(disk),
        "black": b,
        "white": w,
        "corner": _json_square(d.corner),
        "length": d.length,
        "balanced": d.balanced,
        "deleted_side": cp.deleted_side,
        "components": [s.trace for s in subs],
    }
    return LDUFactorization(
        lower=_freeze(lower),
        middle=middle,
        upper=_freeze(upper),
        labeling=labeling,
        trace=trace,
    )


def _freeze(m: Matrix) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in m)


def _json_square(s):
    return list(s) if isinstance(s, tuple) else s


def rank_det(f: LDUFactorization) -> tuple[int, int | None]:
    """Rank of the matrix and, when it is square, its determinant."""
    rank = f.middle.rank
    if f.black_count != f.white_count:
        return rank, None
    if not f.middle.is_identity():
        return rank, 0
    det = intmat.diag_product(f.lower_list()) * intmat.diag_product(f.upper_list())
    return rank, det


def det_exact(f: LDUFactorization) -> int:
    if f.black_count != f.white_count:
        raise NonSquareError("determinant of a rectangular matrix is undefined")
    return rank_det(f)[1]


def _perm_sign_between(src, dst) -> int:
    pos = {s: i for i, s in enumerate(src)}
    perm = [pos[s] for s in dst]
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_for_labeling(f: LDUFactorization, labeling: Labeling) -> int:
    """Determinant of the same matrix written under another labeling.

    Relabeling permutes rows and columns, so the determinant only moves by
    the signs of the two permutations.
    """
    det = det_exact(f)
    if det == 0:
        return 0
    return (
        det
        * _perm_sign_between(f.labeling[0], labeling[0])
        * _perm_sign_between(f.labeling[1], labeling[1])
    )


def det_canonical(disk, f: LDUFactorization | None = None) -> int:
    """Determinant under the disk's canonical labeling, computed via the factorization."""
    if f is None:
        f = ldu_factorize(disk)
    return det_for_labeling(f, disk.canonical_labeling())


def solve_integer(f, v: list[int]) -> list[int]:
    """Integer solution x of B x = v, or a certified NoRationalSolution.

    Accepts a factorization or a disk (which gets factorized).  Free
    coordinates are set to zero; the returned vector satisfies the system
    exactly under the factorization's labeling.
    """
    if not isinstance(f, LDUFactorization):
        f = ldu_factorize(f)
    b, w = f.black_count, f.white_count
    if len(v) != b:
        raise ValueError("right-hand side length mismatch")
    z = intmat.solve_lower_unit(f.lower_list(), list(v))
    y = [0] * w
    used = set()
    for r, c in f.middle.ones:
        y[c] = z[r]
        used.add(r)
    for r in range(b):
        if r not in used and z[r] != 0:
            raise NoRationalSolution(f"inconsistent coordinate {r} after forward substitution")
    x = intmat.solve_upper_unit(f.upper_list(), y)
    check = intmat.matvec(f.product(), x)
    assert check == list(v), "solution verification failed"
    return x


def factorize_matrix_for(disk) -> tuple[BWMatrix, LDUFactorization]:
    """Convenience: the matrix under the factorization's labeling plus the factorization."""
    f = ldu_factorize(disk)
    return black_to_white(disk, f.labeling), f
