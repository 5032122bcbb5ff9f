"""Partitions, Young diagrams in the French convention, and fillings.

Rows are indexed 1-based from the bottom, columns 1-based from the left.
Reading a cell above the top of its column yields 0 and reading row 0
yields the INF sentinel; both boundary conventions are baked into
``Filling.entry`` so the statistics never special-case them.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .perms import multiset_permutations

INF = float("inf")


def is_partition(parts) -> bool:
    parts = tuple(parts)
    if not all(isinstance(p, int) and p > 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_partition(parts) -> tuple[int, ...]:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"{parts} is not a partition")
    return parts


def conjugate(lam) -> tuple[int, ...]:
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= c) for c in range(1, lam[0] + 1))


def n_stat(lam) -> int:
    """The weighted row sum sum_i (i-1) * lam_i."""
    return sum(i * p for i, p in enumerate(lam))


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n, largest part first, in lexicographic descent."""
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(max_part, n)
    for first in range(cap, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_in_box(width: int, height: int) -> Iterator[tuple[int, ...]]:
    """Nonempty partitions with at most `height` parts, each at most `width`."""
    for size in range(1, width * height + 1):
        for lam in partitions(size, width):
            if len(lam) <= height:
                yield lam


class Filling:
    """An assignment of positive integers to the cells of a Young diagram.

    ``rows[0]`` is the bottom row.  Immutable and hashable.
    """

    __slots__ = ("rows", "_colh")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(r) for r in rows)
        widths = tuple(len(r) for r in rows)
        if not is_partition(widths) and widths != ():
            raise ValueError(f"row widths {widths} do not weakly decrease upward")
        self.rows = rows
        self._colh = conjugate(widths)

    @classmethod
    def from_top_rows(cls, rows) -> "Filling":
        return cls(tuple(reversed([tuple(r) for r in rows])))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def col_height(self, c: int) -> int:
        return self._colh[c - 1] if 1 <= c <= len(self._colh) else 0

    def entry(self, r: int, c: int):
        """Entry at (row r, column c); 0 above the column top, INF at row 0."""
        if r == 0:
            return INF
        if 1 <= r <= self.col_height(c):
            return self.rows[r - 1][c - 1]
        return 0

    def row(self, r: int) -> tuple[int, ...]:
        return self.rows[r - 1]

    def with_row(self, r: int, new_row) -> "Filling":
        rows = list(self.rows)
        rows[r - 1] = tuple(new_row)
        return Filling(rows)

    def max_entry(self) -> int:
        return max((x for row in self.rows for x in row), default=0)

    def is_rectangle(self) -> bool:
        return all(len(r) == self.width for r in self.rows)

    def columns(self, cols: Iterable[int]) -> "Filling":
        """Sub-filling of the given equal-height columns, as a rectangle."""
        cols = list(cols)
        if not cols:
            return Filling(())
        heights = {self.col_height(c) for c in cols}
        if len(heights) != 1:
            raise ValueError("selected columns have unequal heights")
        h = heights.pop()
        return Filling(
            tuple(tuple(self.rows[r][c - 1] for c in cols) for r in range(h))
        )

    def content(self, alphabet: int) -> tuple[int, ...]:
        counts = [0] * alphabet
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def __eq__(self, other):
        return isinstance(other, Filling) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in reversed(self.rows))

    @classmethod
    def from_text(cls, text: str) -> "Filling":
        rows = [
            tuple(int(tok) for tok in line.split())
            for line in text.strip().splitlines()
            if line.strip()
        ]
        return cls.from_top_rows(rows)

    def to_obj(self) -> dict:
        return {
            "shape": list(self.shape),
            "rows_top_to_bottom": [list(r) for r in reversed(self.rows)],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "Filling":
        f = cls.from_top_rows(obj["rows_top_to_bottom"])
        if list(f.shape) != list(obj["shape"]):
            raise ValueError("shape field disagrees with row lengths")
        return f

    def __repr__(self):
        return f"Filling({self.rows!r})"


def filling_count(lam, alphabet: int) -> int:
    return alphabet ** sum(lam)


def _cells_row_major(lam):
    # bottom row first, left to right; the last cell is least significant
    return [(r, c) for r in range(1, len(lam) + 1) for c in range(1, lam[r - 1] + 1)]


def filling_by_index(lam, alphabet: int, index: int) -> Filling:
    """The index-th filling in the deterministic enumeration order."""
    lam = check_partition(lam)
    cells = _cells_row_major(lam)
    digits = []
    for _ in cells:
        digits.append(index % alphabet)
        index //= alphabet
    digits.reverse()
    rows = [[0] * p for p in lam]
    for (r, c), d in zip(cells, digits):
        rows[r - 1][c - 1] = d + 1
    return Filling(rows)


def enumerate_fillings(lam, alphabet: int) -> Iterator[Filling]:
    """All fillings with entries in 1..alphabet, least-significant cell fastest."""
    if alphabet < 1:
        raise ValueError("alphabet must be at least 1")
    lam = check_partition(lam)
    for index in range(filling_count(lam, alphabet)):
        yield filling_by_index(lam, alphabet, index)


def row_equivalence_class(f: Filling) -> Iterator[Filling]:
    """All fillings whose row multisets match f's, including f itself."""

    def build(r, acc):
        if r == len(f.rows):
            yield Filling(acc)
            return
        for arrangement in multiset_permutations(f.rows[r]):
            yield from build(r + 1, acc + [arrangement])

    yield from build(0, [])


def rect_spans(lam) -> list[tuple[int, int, int]]:
    """Maximal rectangles as (height, first_col, last_col), heights decreasing."""
    lam = tuple(lam)
    n = len(lam)
    spans = []
    for j in range(n, 0, -1):
        width = lam[j - 1] - (lam[j] if j < n else 0)
        if width > 0:
            start = (lam[j] if j < n else 0) + 1
            spans.append((j, start, lam[j - 1]))
    return spans


def rect_decompose(f: Filling) -> list[tuple[int, int, Filling]]:
    """Split into maximal rectangles: (height, first_col, sub-filling)."""
    return [
        (h, c0, f.columns(range(c0, c1 + 1))) for h, c0, c1 in rect_spans(f.shape)
    ]


def join_rects(pieces: Iterable[Filling]) -> Filling:
    """Concatenate rectangles left to right (heights must strictly decrease)."""
    pieces = [p for p in pieces if p.size]
    if not pieces:
        raise ValueError("nothing to join")
    height = pieces[0].height
    rows = []
    for r in range(1, height + 1):
        row: list[int] = []
        for p in pieces:
            if p.height >= r:
                row.extend(p.row(r))
        rows.append(tuple(row))
    return Filling(rows)


def complement_flip(f: Filling, alphabet: int) -> Filling:
    """Complement entries within 1..alphabet and flip each rectangle upside down."""
    if alphabet < f.max_entry():
        raise ValueError("alphabet smaller than the largest entry")
    flipped = []
    for _h, _c0, rect in rect_decompose(f):
        rows = tuple(
            tuple(alphabet + 1 - x for x in row) for row in reversed(rect.rows)
        )
        flipped.append(Filling(rows))
    return join_rects(flipped)
