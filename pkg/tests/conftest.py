"""Shared fixtures: reference disks with frozen expected values, and the
session-scoped corpora used by the acceptance suite."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from qdisk import Board, parse_glued
from qdisk.corpus import all_boards, random_board, random_glued_disks

FIXTURES = Path(__file__).parent / "fixtures"


# -- 13-square slit disk (fixture file fig1.glue) ------------------------------
# Thirteen squares in a grid with one interior edge left unglued, so the
# complex is a disk but not a board.  Blacks are declared first.

SLIT13_MATRIX = [
    [1, 1, 0, 1, 0, 0, 0],
    [0, 1, 1, 0, 1, 1, 0],
    [0, 0, 1, 0, 0, 1, 0],
    [1, 1, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 1, 1, 0],
    [0, 1, 1, 0, 0, 0, 1],
]

# A valid factorization of SLIT13_MATRIX with all entries in {-1, 0, 1}:
# frozen as an existence witness; the factorization the package produces
# may differ square-for-square but must satisfy the same identities.
SLIT13_LOWER = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [1, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, -1, 1],
]
SLIT13_MIDDLE_ONES = [(0, 0), (1, 1), (2, 2), (3, 3), (4, 4), (5, 6)]
SLIT13_UPPER = [
    [1, 1, 0, 1, 0, 0, 0],
    [0, 1, 1, 0, 1, 1, 0],
    [0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, -1],
    [0, 0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
]


@pytest.fixture(scope="session")
def slit13_text() -> str:
    return (FIXTURES / "fig1.glue").read_text()


@pytest.fixture(scope="session")
def slit13(slit13_text):
    return parse_glued(slit13_text)


# -- 4x5 rectangle worked example ----------------------------------------------
# The rectangle is cut along the length-4 diagonal from its lower-left corner.
# Removed squares carry the first labels; the frozen matrices below are the
# adjacency, the sign matrices, and the eliminated middle block.

RECT45_BLACKS = [(0, 0), (1, 1), (2, 2), (3, 3), (2, 0), (3, 1), (4, 2), (0, 2), (1, 3), (4, 0)]
RECT45_WHITES = [(1, 0), (2, 1), (3, 2), (4, 3), (0, 1), (1, 2), (2, 3), (3, 0), (4, 1), (0, 3)]

RECT45_MATRIX = [
    [1, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 1, 1, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 1, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 1, 1, 0, 0, 0, 0, 1, 1, 0],
    [0, 0, 1, 1, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 1, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, 1, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0],
]

RECT45_S_B_PRIME = (-1, -1, -1, 1, 1, -1)
RECT45_S_W_PRIME = (1, 1, 1, -1, -1, 1)

RECT45_MIDDLE = [
    [1, 1, 0, 1, 0, 0],
    [0, 1, 1, 1, 1, 0],
    [0, 0, 1, 0, 1, 0],
    [1, 1, 0, 0, 0, 1],
    [0, 1, 1, 0, 0, 1],
    [0, 0, 0, 1, 1, 0],
]

# Signed middle block and the elementary-operation matrices of the plain
# (unsigned) elimination of the same example.
RECT45_MIDDLE_TILDE = [
    [-1, -1, 0, 1, 0, 0],
    [0, -1, -1, 1, 1, 0],
    [0, 0, -1, 0, 1, 0],
    [1, 1, 0, 0, 0, 1],
    [0, 1, 1, 0, 0, 1],
    [0, 0, 0, 1, 1, 0],
]
RECT45_XTILDE = [
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
]
RECT45_YTILDE = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
]


@pytest.fixture(scope="session")
def rect45():
    board = Board([(x, y) for x in range(5) for y in range(4)], black_parity=0)
    labeling = (tuple(RECT45_BLACKS), tuple(RECT45_WHITES))
    return board, labeling


# -- six-corner hexomino ---------------------------------------------------------
# Six diagonals: one bad, three balanced (the first corner's has length two),
# two unbalanced good ones running corner to corner.


@pytest.fixture(scope="session")
def hexomino() -> Board:
    return Board([(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (2, 2)])


@pytest.fixture(scope="session")
def hexomino_glued(hexomino):
    return hexomino.to_complex()


# -- boards whose surgery detaches, and a good-but-not-excellent diagonal -------


@pytest.fixture(scope="session")
def staircase10() -> Board:
    """Staircase whose corner diagonal detaches three single squares."""
    diag = [(i, i) for i in range(4)]
    left = [(i, i + 1) for i in range(3)]
    right = [(i + 1, i) for i in range(3)]
    return Board(diag + left + right)


@pytest.fixture(scope="session")
def bent_hexomino() -> Board:
    """Board whose corner diagonal is good and balanced but not excellent."""
    return Board([(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (0, 2)])


# -- corpora ---------------------------------------------------------------------

ACCEPTANCE_MAX_CELLS = 12
RANDOM_BOARDS = 200
RANDOM_MAX_CELLS = 24
GLUED_DISKS = 50
GLUED_MAX_SQUARES = 20


@pytest.fixture(scope="session")
def boards_corpus():
    """Every board shape with at most 12 cells, one per congruence class."""
    return all_boards(ACCEPTANCE_MAX_CELLS)


@pytest.fixture(scope="session")
def square_boards_corpus(boards_corpus):
    return [b for b in boards_corpus if len(b) >= 2 and b.color_counts()[0] == b.color_counts()[1]]


@pytest.fixture(scope="session")
def random_boards_corpus():
    """200 seeded random boards with balanced colors and at most 24 cells."""
    rng = random.Random(20260810)
    out = []
    while len(out) < RANDOM_BOARDS:
        n = rng.randrange(2, RANDOM_MAX_CELLS + 1, 2)
        board = random_board(rng, n)
        if board.color_counts()[0] == board.color_counts()[1]:
            out.append(board)
    return out


@pytest.fixture(scope="session")
def glued_corpus():
    """50 seeded glued disks that are not boards, at most 20 squares."""
    return random_glued_disks(11, GLUED_DISKS, GLUED_MAX_SQUARES)
