"""Exact dense linear algebra over the scalar domains.

Matrix products work over both domains; kernels and ranks need a field,
so they require a root-of-unity domain (specialize generic matrices
first).  Kernel bases are echelon-normalized and therefore deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalar import ScalarDomain, specialize, root_of_unity


@dataclass(frozen=True)
class Matrix:
    domain: ScalarDomain
    entries: tuple[tuple, ...]

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        widths = {len(row) for row in entries}
        if len(widths) > 1:
            raise ValueError("ragged matrix rows")
        for row in entries:
            for x in row:
                if not self.domain.contains(x):
                    raise ValueError(f"entry {x!r} is not in domain {self.domain}")

    @classmethod
    def from_rows(cls, domain: ScalarDomain, rows) -> "Matrix":
        return cls(domain, tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, domain: ScalarDomain, n: int) -> "Matrix":
        one, zero = domain.one(), domain.zero()
        return cls(domain, tuple(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)
        ))

    @classmethod
    def zero(cls, domain: ScalarDomain, rows: int, cols: int) -> "Matrix":
        z = domain.zero()
        return cls(domain, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def column(cls, domain: ScalarDomain, coords) -> "Matrix":
        return cls(domain, tuple((x,) for x in coords))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, key):
        r, c = key
        return self.entries[r][c]

    def column_coords(self, c: int = 0) -> tuple:
        return tuple(row[c] for row in self.entries)

    def _check_domain(self, other: "Matrix"):
        if self.domain != other.domain:
            raise ValueError(f"mixed domains {self.domain} and {other.domain}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_domain(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shapes differ")
        return Matrix(self.domain, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        ))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(self.domain.from_int(-1))

    def scale(self, scalar) -> "Matrix":
        return Matrix(self.domain, tuple(
            tuple(scalar * x for x in row) for row in self.entries
        ))

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        self._check_domain(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = self.domain.zero()
        cols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(tuple(out_row))
        return Matrix(self.domain, tuple(out))

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace needs a square matrix")
        acc = self.domain.zero()
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def __str__(self):
        return "\n".join(
            "[" + ", ".join(str(x) for x in row) + "]" for row in self.entries
        )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a * b


def vstack(blocks: list[Matrix], domain: ScalarDomain, cols: int) -> Matrix:
    rows = []
    for block in blocks:
        if block.domain != domain or block.cols != cols:
            raise ValueError("incompatible block in vertical stack")
        rows.extend(block.entries)
    return Matrix(domain, tuple(rows))


def specialize_matrix(m: Matrix, p: int) -> Matrix:
    """Entrywise specialization of a generic matrix at a p-th root of unity."""
    if not m.domain.is_generic:
        raise ValueError("specialize_matrix expects a generic-domain matrix")
    return Matrix(root_of_unity(p), tuple(
        tuple(specialize(x, p) for x in row) for row in m.entries
    ))


def _require_field(m: Matrix):
    if m.domain.is_generic:
        raise ValueError("kernel/rank need a field domain; specialize at a root of unity first")


def _rref(m: Matrix) -> tuple[list[list], list[int]]:
    rows = [list(row) for row in m.entries]
    pivots: list[int] = []
    pivot_row = 0
    for col in range(m.cols):
        found = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col]:
                found = r
                break
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        lead = rows[pivot_row][col]
        rows[pivot_row] = [x / lead for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    return rows, pivots


def rank(m: Matrix) -> int:
    """Exact rank over a field domain."""
    _require_field(m)
    _, pivots = _rref(m)
    return len(pivots)


def kernel(m: Matrix) -> tuple[Matrix, ...]:
    """Echelon-normalized basis of the right null space, as column vectors.

    Each basis vector has a 1 in one free coordinate and 0 in the others,
    so the output is unique and deterministic.
    """
    _require_field(m)
    rows, pivots = _rref(m)
    one, zero = m.domain.one(), m.domain.zero()
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        coords = [zero] * m.cols
        coords[f] = one
        for r, pc in enumerate(pivots):
            coords[pc] = -rows[r][f] + zero
        basis.append(Matrix.column(m.domain, coords))
    return tuple(basis)
