"""Partitions, Young tableaux, permutations, reduced words, boundary strips.

Conventions used throughout the package:

* tableaux are stored row-major with 1-based entries; positions handed
  around internally are 0-based (row, column) pairs;
* the column reading word lists entries down the first column, then down
  each successive column; "i precedes j" refers to this word;
* the superstandard tableau of a shape is filled down successive columns
  left to right;
* the standard-tableau basis order compares the row index of n, then of
  n-1, and so on (smaller row first).  This is the order the generator
  matrices are written in.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; trailing zeros are dropped."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)
        for i, part in enumerate(parts):
            if part <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < part:
                raise ValueError(f"partition parts must weakly decrease: {parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        try:
            parts = tuple(int(piece) for piece in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        return cls(parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def column_heights(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(sum(1 for part in self.parts if part > j) for j in range(self.parts[0]))

    def __str__(self):
        return ",".join(str(part) for part in self.parts)


@dataclass(frozen=True)
class Tableau:
    """A partition shape filled bijectively with 1..n, stored row-major."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = tuple(len(row) for row in rows)
        Partition(lengths)
        n = sum(lengths)
        seen = {entry for row in rows for entry in row}
        if seen != set(range(1, n + 1)):
            raise ValueError(f"tableau entries must be exactly 1..{n}: {rows}")

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        try:
            rows = tuple(
                tuple(int(piece) for piece in row.split(","))
                for row in text.strip().split("/")
            )
        except ValueError:
            raise ValueError(f"cannot parse tableau {text!r}") from None
        return cls(rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def n(self) -> int:
        return sum(len(row) for row in self.rows)

    def position(self, entry: int) -> tuple[int, int]:
        """0-based (row, column) of an entry."""
        for r, row in enumerate(self.rows):
            for c, value in enumerate(row):
                if value == entry:
                    return (r, c)
        raise ValueError(f"entry {entry} not in tableau {self}")

    def entry(self, r: int, c: int) -> int:
        return self.rows[r][c]

    def column(self, c: int) -> tuple[int, ...]:
        return tuple(row[c] for row in self.rows if len(row) > c)

    def column_word(self) -> tuple[int, ...]:
        width = len(self.rows[0]) if self.rows else 0
        word = []
        for c in range(width):
            word.extend(self.column(c))
        return tuple(word)

    def is_standard(self) -> bool:
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                return False
        width = len(self.rows[0]) if self.rows else 0
        for c in range(width):
            col = self.column(c)
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                return False
        return True

    def with_swapped(self, a: int, b: int) -> "Tableau":
        """Swap the entries a and b (values, not positions)."""
        swap = {a: b, b: a}
        return Tableau(tuple(tuple(swap.get(v, v) for v in row) for row in self.rows))

    def __str__(self):
        return "/".join(",".join(str(v) for v in row) for row in self.rows)


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n}; images[i-1] = w(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inversions(self) -> int:
        images = self.images
        return sum(
            1
            for i in range(len(images))
            for j in range(i + 1, len(images))
            if images[i] > images[j]
        )

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A reduced word (i1, ..., ik) with w = s_{i1} s_{i2} ... s_{ik}.

    Deterministic choice: peel the smallest left descent first, i.e. the
    smallest value v whose position lies after the position of v+1.  The
    word length equals the inversion count of w.
    """
    n = w.n
    pos = [0] * (n + 1)
    for i, v in enumerate(w.images):
        pos[v] = i
    word = []
    while True:
        for v in range(1, n):
            if pos[v] > pos[v + 1]:
                word.append(v)
                pos[v], pos[v + 1] = pos[v + 1], pos[v]
                break
        else:
            return tuple(word)


@lru_cache(maxsize=None)
def superstandard(shape: Partition) -> Tableau:
    """The standard tableau filled down successive columns left to right."""
    heights = shape.column_heights()
    grid = [[0] * part for part in shape.parts]
    entry = 1
    for c, height in enumerate(heights):
        for r in range(height):
            grid[r][c] = entry
            entry += 1
    return Tableau(tuple(tuple(row) for row in grid))


def precedes(i: int, j: int, t: Tableau) -> bool:
    """True iff i occurs before j in the column reading word of t."""
    if i == j:
        return False
    ri, ci = t.position(i)
    rj, cj = t.position(j)
    return (ci, ri) < (cj, rj)


def word_of_tableau(t: Tableau) -> Permutation:
    """The permutation w with w(superstandard) = t, acting on entries."""
    base = superstandard(t.shape)
    images = [0] * t.n
    for r, row in enumerate(base.rows):
        for c, v in enumerate(row):
            images[v - 1] = t.entry(r, c)
    return Permutation(tuple(images))


def tableau_distance(t: Tableau) -> int:
    """Inversion count of word_of_tableau(t)."""
    return word_of_tableau(t).inversions()


def _order_key(t: Tableau) -> tuple[int, ...]:
    # basis order: row index of n, then n-1, ...; smaller row first
    row_of = [0] * (t.n + 1)
    for r, row in enumerate(t.rows):
        for v in row:
            row_of[v] = r
    return tuple(row_of[v] for v in range(t.n, 0, -1))


def _generate_standard(shape: Partition):
    parts = shape.parts
    n = shape.n
    filled = [0] * len(parts)
    grid = [[0] * part for part in parts]

    def place(entry: int):
        if entry > n:
            yield Tableau(tuple(tuple(row) for row in grid))
            return
        for r, part in enumerate(parts):
            if filled[r] < part and (r == 0 or filled[r - 1] > filled[r]):
                grid[r][filled[r]] = entry
                filled[r] += 1
                yield from place(entry + 1)
                filled[r] -= 1

    yield from place(1)


@lru_cache(maxsize=None)
def enumerate_standard(shape: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux of the shape, in the fixed basis order."""
    return tuple(sorted(_generate_standard(shape), key=_order_key))


@lru_cache(maxsize=None)
def basis_index(shape: Partition) -> dict[Tableau, int]:
    return {t: i for i, t in enumerate(enumerate_standard(shape))}


def hook_count(shape: Partition) -> int:
    """n! divided by the product of hook lengths."""
    heights = shape.column_heights()
    product = 1
    for r, part in enumerate(shape.parts):
        for c in range(part):
            product *= (part - c - 1) + (heights[c] - r - 1) + 1
    return factorial(shape.n) // product


@dataclass(frozen=True)
class BoundaryStrip:
    """A below-else-left path from a row's rightmost box to a column bottom.

    Boxes are 1-based (row, column) pairs in path order.
    """

    start_row: int
    boxes: tuple[tuple[int, int], ...]
    length: int
    second_row_boxes: int


def boundary_strips(shape: Partition) -> tuple[BoundaryStrip, ...]:
    """Every boundary strip of the shape, one family per starting row."""
    parts = shape.parts
    heights = shape.column_heights()
    strips = []
    for start in range(1, len(parts) + 1):
        path = []
        r, c = start, parts[start - 1]  # 1-based
        while True:
            path.append((r, c))
            if heights[c - 1] > r:
                r += 1
            elif c > 1:
                c -= 1
            else:
                break
        for length in range(1, len(path) + 1):
            end_r, end_c = path[length - 1]
            if heights[end_c - 1] == end_r:  # bottom of its column
                boxes = tuple(path[:length])
                strips.append(
                    BoundaryStrip(
                        start_row=start,
                        boxes=boxes,
                        length=length,
                        second_row_boxes=sum(1 for (br, _) in boxes if br == 2),
                    )
                )
    return tuple(strips)
