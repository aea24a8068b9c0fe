"""Deterministic test-corpus generators: exhaustive small boards, rectangles,
seeded random boards, and seeded slit disks that are not boards."""

from __future__ import annotations

import random

from .disk_core import Board, QuadDisk
from .errors import NotADiskError, QdiskError


def _transforms(cells):
    variants = []
    cur = list(cells)
    for _ in range(4):
        cur = [(-y, x) for x, y in cur]
        variants.append(cur)
        variants.append([(-x, y) for x, y in cur])
    return variants


def canonical_form(cells) -> tuple:
    """Free canonical form: minimum over rotations/reflections, translated to the origin."""
    best = None
    for variant in _transforms(cells):
        xs = min(x for x, _ in variant)
        ys = min(y for _, y in variant)
        form = tuple(sorted((x - xs, y - ys) for x, y in variant))
        if best is None or form < best:
            best = form
    return best


def _fixed_polyominoes(max_cells: int):
    """Redelmeier enumeration: every fixed polyomino once, up to translation.

    Cells live in the half-plane y > 0 plus the ray y == 0, x >= 0, and every
    polyomino contains the origin; that pins one representative per
    translation class.
    """

    origin = (0, 0)

    def allowed(c):
        return c[1] > 0 or (c[1] == 0 and c[0] >= 0)

    def neighbors(c):
        x, y = c
        return ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))

    results = []
    cells = [origin]
    forbidden = {origin}

    def rec(untried):
        results.append(tuple(cells))
        if len(cells) == max_cells:
            return
        while untried:
            cand = untried.pop()  # stays excluded for the rest of this level
            cells.append(cand)
            fresh = [
                n
                for n in neighbors(cand)
                if allowed(n) and n not in forbidden
            ]
            forbidden.update(fresh)
            rec(untried + fresh)
            for n in fresh:
                forbidden.discard(n)
            cells.pop()

    start = [n for n in neighbors(origin) if allowed(n)]
    forbidden.update(start)
    rec(start)
    return results


def all_boards(max_cells: int, square_only: bool = False) -> list[Board]:
    """Every board shape with at most max_cells cells, one per congruence class.

    Shapes are deduplicated up to rotation, reflection and translation; cell
    sets with holes are dropped.  With ``square_only`` only shapes with
    equally many black and white cells survive.
    """
    seen = set()
    forms = []
    for cells in _fixed_polyominoes(max_cells):
        form = canonical_form(cells)
        if form in seen:
            continue
        seen.add(form)
        if square_only:
            blacks = sum(1 for x, y in form if (x + y) % 2 == 0)
            if 2 * blacks != len(form):
                continue
        try:
            forms.append(Board(form))
        except NotADiskError:
            continue
    forms.sort(key=lambda b: (len(b.cells), b.cells))
    return forms


def rectangles(max_cells: int) -> list[Board]:
    out = []
    for h in range(1, max_cells + 1):
        for w in range(h, max_cells + 1):
            if h * w <= max_cells:
                out.append(Board([(x, y) for x in range(w) for y in range(h)]))
    out.sort(key=lambda b: (len(b.cells), b.cells))
    return out


def random_board(rng: random.Random | int, n_cells: int) -> Board:
    """Grow a random board of exactly n_cells cells; deterministic per seed."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    cells = {(0, 0)}
    while len(cells) < n_cells:
        frontier = sorted(
            {
                (x + dx, y + dy)
                for x, y in cells
                for dx, dy in ((0, 1), (1, 0), (0, -1), (-1, 0))
            }
            - cells
        )
        rng.shuffle(frontier)
        for cand in frontier:
            try:
                Board(cells | {cand})
            except NotADiskError:
                continue
            cells.add(cand)
            break
        else:  # pragma: no cover - growth can always extend a valid board
            raise AssertionError("random growth got stuck")
    return Board(cells)


def _interior_edges(disk: QuadDisk):
    """Glued edges as (vertex pair, slot) entries of the complex."""
    edges = []
    for a, e, b, f in disk.gluing_list():
        v1 = disk.vertex_of(a, e)
        v2 = disk.vertex_of(a, (e + 1) % 4)
        edges.append((v1, v2, (a, e)))
    return edges


def random_slit_disk(rng: random.Random | int, max_cells: int) -> QuadDisk | None:
    """One attempt at a glued disk that is not a board: cut a board along a slit.

    Unglues a simple path of interior edges running inward from a boundary
    vertex.  Returns None when the attempt does not survive validation or
    stays a board shape (no boundary vertex in four or more squares).
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    n = rng.randrange(8, max_cells + 1)
    board = random_board(rng, n)
    disk = board.to_complex()
    edges = _interior_edges(disk)
    by_vertex: dict[int, list] = {}
    for v1, v2, slot in edges:
        by_vertex.setdefault(v1, []).append((v2, slot))
        by_vertex.setdefault(v2, []).append((v1, slot))
    boundary_starts = [
        v
        for v in by_vertex
        if not disk.is_interior_vertex(v) and len(disk.vertex_members(v)) >= 2
    ]
    if not boundary_starts:
        return None
    v = rng.choice(sorted(boundary_starts))
    length = rng.randrange(1, 4)
    cut = []
    visited = {v}
    for _ in range(length):
        options = [
            (w, slot)
            for w, slot in by_vertex.get(v, ())
            if disk.is_interior_vertex(w) and w not in visited
        ]
        if not options:
            break
        w, slot = rng.choice(sorted(options))
        cut.append(slot)
        visited.add(w)
        v = w
    if not cut:
        return None
    cut_set = set(cut)
    gluings = [
        (a, e, b, f)
        for a, e, b, f in disk.gluing_list()
        if (a, e) not in cut_set and (b, f) not in cut_set
    ]
    try:
        result = QuadDisk(disk.n, gluings, colors=disk.colors)
    except QdiskError:
        return None
    census = result.census()
    if not any(r >= 4 for r, _ in census.boundary_vertex_squares):
        return None  # still realizable as a board; not interesting here
    return result


def random_glued_disks(seed: int, count: int, max_cells: int) -> list[QuadDisk]:
    """Seeded collection of glued non-board disks."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        disk = random_slit_disk(rng, max_cells)
        if disk is not None:
            out.append(disk)
    return out
