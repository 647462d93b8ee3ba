"""Extended diagrams, rank functions, SE corners, and the corner taxonomy.

Coordinates are matrix style throughout: rows run top to bottom over
[-n, n], columns left to right.  The extended diagram of a signed
permutation lives on columns [-n, -1]; the embedded diagram of the full
form lives on columns [-n, n].

A corner position (p, q) names the box (q - 1, -p).  Corner records
carry the rank value k and a taxonomy class; the class OPTIONAL is only
assigned later, once a triple is known (see the theta module).
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Optional, Tuple

from .sigperm import FullPermutation, SignedPermutation

Box = Tuple[int, int]  # (row, col)


class CornerClass(Enum):
    NE_PATH = "ne_path"
    UNESSENTIAL = "unessential"
    OPTIONAL = "optional"
    OTHER = "other"


@dataclass(frozen=True)
class CornerRecord:
    """An SE corner (k, p, q): box (q-1, -p) with rank value k."""

    k: int
    p: int
    q: int
    kind: CornerClass = CornerClass.OTHER

    @property
    def position(self) -> Tuple[int, int]:
        return (self.p, self.q)

    @property
    def triple(self) -> Tuple[int, int, int]:
        return (self.k, self.p, self.q)

    @property
    def box(self) -> Box:
        return (self.q - 1, -self.p)

    def with_kind(self, kind: CornerClass) -> "CornerRecord":
        return dataclasses.replace(self, kind=kind)

    def __repr__(self) -> str:
        return f"CornerRecord({self.k}, {self.p}, {self.q}, {self.kind.value})"


def reflect(t: CornerRecord) -> CornerRecord:
    """The reflected corner (k + p + q - 1, -p + 1, -q + 1).

    Reflection is an involution exchanging a corner of the embedded
    diagram with its mirror image through the center.
    """
    return CornerRecord(t.k + t.p + t.q - 1, -t.p + 1, -t.q + 1, t.kind)


@dataclass(frozen=True)
class CornerSet:
    """All corners of a signed permutation, sorted p desc then q desc."""

    corners: Tuple[CornerRecord, ...]

    @property
    def ne_path(self) -> Tuple[CornerRecord, ...]:
        return tuple(c for c in self.corners if c.kind is CornerClass.NE_PATH)

    @property
    def unessential(self) -> Tuple[CornerRecord, ...]:
        return tuple(c for c in self.corners if c.kind is CornerClass.UNESSENTIAL)

    @property
    def other(self) -> Tuple[CornerRecord, ...]:
        return tuple(c for c in self.corners if c.kind is CornerClass.OTHER)

    def positions(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(c.position for c in self.corners)

    def __iter__(self):
        return iter(self.corners)

    def __len__(self):
        return len(self.corners)


@dataclass(frozen=True)
class ExtendedDiagram:
    """Dots, crossed boxes, and surviving boxes on the (2n+1) x n grid.

    `boxes` is everything not weakly south or east of a dot; removing the
    crossed boxes leaves `diagram_boxes`, whose cardinality equals the
    length of the permutation.
    """

    n: int
    dots: FrozenSet[Box]
    crosses: FrozenSet[Box]
    boxes: FrozenSet[Box]

    @property
    def diagram_boxes(self) -> FrozenSet[Box]:
        return self.boxes - self.crosses


def rank(w: SignedPermutation, p: int, q: int) -> int:
    """Number of i in [p, n] with w(i) <= -q.

    Counts the dots weakly southwest of the corner position (p, q); by
    antisymmetry it also equals #{i <= -p | w(i) >= q}.
    """
    n = w.n
    if not 1 <= p <= n:
        raise ValueError(f"p must be in [1, {n}], got {p}")
    if not -n <= q <= n:
        raise ValueError(f"q must be in [{-n}, {n}], got {q}")
    return sum(1 for i in range(p, n + 1) if w(i) <= -q)


def full_rank(full: FullPermutation, p: int, q: int) -> int:
    """Rank of the embedded permutation at (p, q); p may be <= 0 here."""
    return sum(1 for i in range(p, full.n + 1) if full(i) <= -q)


def build_extended_diagram(w: SignedPermutation) -> ExtendedDiagram:
    n = w.n
    dots = frozenset((w(i), i) for i in range(-n, 0))
    crosses = set()
    for j in range(1, n + 1):
        # the dot in column -j sits at row -w(j); its crosses fill row w(j)
        for b in range(-j, 0):
            crosses.add((w(j), b))
    winv = w.inverse()
    boxes = set()
    for r in range(-n, n + 1):
        for c in range(-n, 0):
            if w(c) > r and winv(r) > c:
                boxes.add((r, c))
    diagram = ExtendedDiagram(n, dots, frozenset(crosses), frozenset(boxes))
    # the crossed boxes inside the surviving region are exactly those the
    # three-condition membership test rejects
    assert diagram.diagram_boxes == {
        (r, c) for (r, c) in boxes if winv(-r) > c
    }
    assert len(diagram.diagram_boxes) == w.length()
    return diagram


def is_se_corner(full: FullPermutation, a: int, b: int) -> bool:
    """The double-descent test at box (a, b): w jumps down across column
    b and the inverse jumps down across row a."""
    return (
        full(b) > a >= full(b + 1)
        and full.inverse_at(a) > b >= full.inverse_at(a + 1)
    )


def full_corners(full: FullPermutation) -> Tuple[CornerRecord, ...]:
    """All SE corners of the embedded permutation's diagram.

    These include corners with p <= 0; the signed-permutation corner set
    (see `corners`) keeps only p in [1, n] minus the excluded column-one
    positions.  Sorted p desc, q desc.
    """
    n = full.n
    found = []
    for a in range(-n - 1, n + 1):
        for b in range(-n - 1, n + 1):
            if is_se_corner(full, a, b):
                p, q = -b, a + 1
                found.append(CornerRecord(full_rank(full, p, q), p, q))
    found.sort(key=lambda t: (-t.p, -t.q))
    return tuple(found)


def _minimal(records: Iterable[CornerRecord]) -> set:
    """Positions minimal in the order (p, q) < (p', q') iff p > p', q < q'."""
    recs = list(records)
    out = set()
    for t in recs:
        if not any(u.p > t.p and u.q < t.q for u in recs):
            out.add(t.position)
    return out


def _is_unessential(t: CornerRecord, ne_positions: set) -> bool:
    if t.q >= 0:
        return False
    has_column_mate = any(p1 == t.p and q1 < t.q for (p1, q1) in ne_positions)
    has_row_mate = any(q2 == -t.q + 1 and p2 > 0 for (p2, q2) in ne_positions)
    has_smaller = any(p3 > t.p and q3 < t.q for (p3, q3) in ne_positions)
    return has_column_mate and has_row_mate and has_smaller


def corners(w: SignedPermutation) -> CornerSet:
    """The corner set of a signed permutation, classified and sorted.

    A position (p, q) with p in [1, n] is kept when the box (q-1, -p) is
    an SE corner of the embedded diagram, except the positions with
    p = 1 and q < 0 (their boxes sit in the column that the reflection
    argument already accounts for).
    """
    n = w.n
    full = w.embed_odd()
    raw = []
    for p in range(1, n + 1):
        for q in range(-n + 1, n + 1):
            if p == 1 and q < 0:
                continue
            if is_se_corner(full, q - 1, -p):
                raw.append(CornerRecord(rank(w, p, q), p, q))
    raw.sort(key=lambda t: (-t.p, -t.q))

    ne_positions = _minimal(raw)
    classified = []
    for t in raw:
        if t.position in ne_positions:
            classified.append(t.with_kind(CornerClass.NE_PATH))
        elif _is_unessential(t, ne_positions):
            classified.append(t.with_kind(CornerClass.UNESSENTIAL))
        else:
            classified.append(t.with_kind(CornerClass.OTHER))
    cs = CornerSet(tuple(classified))

    # the sorted NE path must be simultaneously monotone in p and q
    path = cs.ne_path
    assert all(path[i].p >= path[i + 1].p for i in range(len(path) - 1))
    assert all(path[i].q >= path[i + 1].q for i in range(len(path) - 1))
    return cs


def ne_path(cs: CornerSet) -> Tuple[CornerRecord, ...]:
    """Minimal corners, sorted with p and q simultaneously decreasing."""
    return cs.ne_path


def unessential_corners(cs: CornerSet) -> Tuple[CornerRecord, ...]:
    return cs.unessential


# ---------------------------------------------------------------------------
# left lower regions


def left_lower_region(d: ExtendedDiagram, p: int, q: int) -> FrozenSet[Box]:
    """Grid boxes (a, b) with a >= q and b <= -p."""
    n = d.n
    if not 1 <= p <= n or not -n <= q <= n:
        raise ValueError(f"region corner ({p}, {q}) out of range for rank {n}")
    return frozenset(
        (a, b) for a in range(q, n + 1) for b in range(-n, -p + 1)
    )


def count_dots_in_region(d: ExtendedDiagram, p: int, q: int) -> int:
    """Dots with row >= q and column <= -p; realizes the rank value."""
    return sum(1 for (r, c) in d.dots if r >= q and c <= -p)


# ---------------------------------------------------------------------------
# ASCII rendering

def _corner_token(k: int, kind: Optional[CornerClass]) -> str:
    if kind is None:
        return str(k)
    letter = {
        CornerClass.NE_PATH: "N",
        CornerClass.UNESSENTIAL: "U",
        CornerClass.OPTIONAL: "O",
        CornerClass.OTHER: "?",
    }[kind]
    return f"{k}{letter}"


def _render_grid(row_range, col_range, cell) -> str:
    width = 3
    header = "    " + "".join(f"{c:>{width}}" for c in col_range)
    lines = [header]
    for r in row_range:
        lines.append(f"{r:>4}" + "".join(f"{cell(r, c):>{width}}" for c in col_range))
    return "\n".join(lines)


def render_extended(
    w: SignedPermutation,
    *,
    show_crosses: bool = False,
    corner_kinds: bool = True,
    corner_records: Optional[Iterable[CornerRecord]] = None,
) -> str:
    """ASCII picture of the extended diagram.

    "o" dots, "#" surviving diagram boxes, "." removed or crossed boxes
    ("x" for crossed ones when show_crosses is on).  SE-corner boxes are
    overlaid with their rank value, plus a class letter (N/U/O) when
    corner_kinds is set.  Row and column indices sit in the margins.
    """
    n = w.n
    d = build_extended_diagram(w)
    if corner_records is None:
        corner_records = corners(w).corners
    overlay = {
        t.box: _corner_token(t.k, t.kind if corner_kinds else None)
        for t in corner_records
    }

    def cell(r, c):
        if (r, c) in overlay:
            return overlay[(r, c)]
        if (r, c) in d.dots:
            return "o"
        if (r, c) in d.boxes:
            if (r, c) in d.crosses:
                return "x" if show_crosses else "."
            return "#"
        return "."

    return _render_grid(range(-n, n + 1), range(-n, 0), cell)


def render_full(w: SignedPermutation) -> str:
    """ASCII picture of the embedded permutation's full diagram.

    Shows all (2n+1)^2 boxes with dots, surviving boxes, and every SE
    corner (including those at columns >= 0) overlaid with its rank.
    """
    full = w.embed_odd()
    n = full.n
    overlay = {t.box: str(t.k) for t in full_corners(full)}
    dots = {(full(c), c) for c in range(-n, n + 1)}
    survives = {
        (r, c)
        for r in range(-n, n + 1)
        for c in range(-n, n + 1)
        if full(c) > r and full.inverse_at(r) > c
    }

    def cell(r, c):
        if (r, c) in overlay:
            return overlay[(r, c)]
        if (r, c) in dots:
            return "o"
        return "#" if (r, c) in survives else "."

    return _render_grid(range(-n, n + 1), range(-n, n + 1), cell)
