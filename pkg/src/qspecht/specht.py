"""The Specht module S^lambda of the Hecke algebra H_n(q).

The module is spanned by tableau vectors v_t subject to two families of
relations, which together rewrite any v_t into the standard-tableau
basis ("straightening"):

* column relations -- transposing two entries of one column negates the
  vector, so columns can be sorted at the cost of a sign;
* Garnir relations -- at a row descent of a column-sorted tableau, the
  signed q-weighted sum over all redistributions of the two column
  segments (each kept increasing) vanishes; the violating tableau's term
  is the dominant one and is solved for.

The generator h_i acts on v_t through the swap x of i and i+1:
v_x if i precedes i+1 in the column reading word of t, and
q v_x + (q-1) v_t otherwise.

The column elements 1 + h_a and the Garnir elements
sum_d (-q)^{-l(d)} h(d) (d over minimal-length coset representatives)
annihilate the superstandard generator vector; evaluating them inside a
different Specht module is what the root-of-unity submodule search uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .combinat import (
    Partition,
    Permutation,
    Tableau,
    basis_index,
    enumerate_standard,
    precedes,
    reduced_word,
    superstandard,
    tableau_distance,
)
from .linalg import Matrix
from .scalar import GENERIC, ScalarDomain

TOPMOST = "topmost"
BOTTOMMOST = "bottommost"

_STRAIGHTEN_CACHE: dict = {}


@dataclass(frozen=True)
class SpechtVector:
    """Coordinates in the ordered standard-tableau basis of one shape."""

    shape: Partition
    domain: ScalarDomain
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != len(enumerate_standard(self.shape)):
            raise ValueError("coordinate count does not match the standard basis")

    @classmethod
    def zero(cls, shape: Partition, domain: ScalarDomain) -> "SpechtVector":
        z = domain.zero()
        return cls(shape, domain, tuple(z for _ in enumerate_standard(shape)))

    @classmethod
    def basis_vector(cls, t: Tableau, domain: ScalarDomain) -> "SpechtVector":
        return cls.from_terms(t.shape, {t: domain.one()}, domain)

    @classmethod
    def from_terms(cls, shape: Partition, terms: Mapping[Tableau, object],
                   domain: ScalarDomain) -> "SpechtVector":
        index = basis_index(shape)
        coords = [domain.zero()] * len(index)
        for t, c in terms.items():
            coords[index[t]] = coords[index[t]] + c
        return cls(shape, domain, tuple(coords))

    def terms(self) -> dict[Tableau, object]:
        basis = enumerate_standard(self.shape)
        return {t: c for t, c in zip(basis, self.coords) if c}

    def is_zero(self) -> bool:
        return not any(self.coords)

    def coordinate(self, t: Tableau):
        return self.coords[basis_index(self.shape)[t]]

    def __add__(self, other: "SpechtVector") -> "SpechtVector":
        if self.shape != other.shape or self.domain != other.domain:
            raise ValueError("mixed shapes or domains")
        return SpechtVector(self.shape, self.domain,
                            tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, scalar) -> "SpechtVector":
        return SpechtVector(self.shape, self.domain,
                            tuple(scalar * c for c in self.coords))

    def __sub__(self, other: "SpechtVector") -> "SpechtVector":
        return self + other.scale(self.domain.from_int(-1))


class TableauVector:
    """Formal scalar combination of same-shape tableau vectors."""

    def __init__(self, shape: Partition, domain: ScalarDomain,
                 terms: Mapping[Tableau, object] = ()):
        self.shape = shape
        self.domain = domain
        self.terms: dict[Tableau, object] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for t, c in items:
            if t.shape != shape:
                raise ValueError(f"tableau {t} does not have shape {shape}")
            if c:
                self.terms[t] = self.terms.get(t, domain.zero()) + c

    @classmethod
    def single(cls, t: Tableau, domain: ScalarDomain) -> "TableauVector":
        return cls(t.shape, domain, {t: domain.one()})


def _column_sorted(t: Tableau) -> tuple[int, Tableau]:
    """Sort every column, returning the sign picked up (+1 or -1)."""
    grid = [list(row) for row in t.rows]
    heights = t.shape.column_heights()
    sign = 1
    for c, height in enumerate(heights):
        col = [grid[r][c] for r in range(height)]
        inversions = sum(
            1 for i in range(height) for j in range(i + 1, height) if col[i] > col[j]
        )
        if inversions:
            sign *= -1 if inversions % 2 else 1
            for r, v in enumerate(sorted(col)):
                grid[r][c] = v
    return sign, Tableau(tuple(tuple(row) for row in grid))


def _row_violation(t: Tableau, policy: str) -> tuple[int, int] | None:
    rows = range(len(t.rows)) if policy == TOPMOST else range(len(t.rows) - 1, -1, -1)
    for r in rows:
        row = t.rows[r]
        cols = range(len(row) - 1) if policy == TOPMOST else range(len(row) - 2, -1, -1)
        for c in cols:
            if row[c] > row[c + 1]:
                return (r, c)
    return None


def garnir_relation_terms(t: Tableau, row: int, col: int,
                          domain: ScalarDomain = GENERIC) -> dict[Tableau, object]:
    """The Garnir relation at the descent t[row][col] > t[row][col+1].

    Returns every redistribution of the two column segments (the entries
    from the descent cell down, and from the top of the next column down
    to the descent row) mapped to its coefficient (-q)^(l(w_t) - l(w_t')),
    normalized so that t itself carries coefficient 1.  The coefficients
    sum against the tableau vectors to zero in the module.
    """
    if t.rows[row][col] <= t.rows[row][col + 1]:
        raise ValueError(f"no descent at row {row}, column {col} of {t}")
    heights = t.shape.column_heights()
    left_cells = [(r, col) for r in range(row, heights[col])]
    right_cells = [(r, col + 1) for r in range(0, row + 1)]
    pool = sorted(t.rows[r][c] for r, c in left_cells + right_cells)
    base_length = tableau_distance(t)
    out: dict[Tableau, object] = {}
    for left_values in combinations(pool, len(left_cells)):
        right_values = sorted(set(pool) - set(left_values))
        grid = [list(r) for r in t.rows]
        for (r, c), v in zip(left_cells, left_values):
            grid[r][c] = v
        for (r, c), v in zip(right_cells, right_values):
            grid[r][c] = v
        candidate = Tableau(tuple(tuple(r) for r in grid))
        out[candidate] = domain.neg_q_power(base_length - tableau_distance(candidate))
    return out


def _straighten_tableau(t: Tableau, domain: ScalarDomain,
                        policy: str = TOPMOST) -> tuple:
    """Standard-basis expansion of v_t as ((tableau, coefficient), ...)."""
    key = (t, domain)
    if policy == TOPMOST:
        cached = _STRAIGHTEN_CACHE.get(key)
        if cached is not None:
            return cached
    if t.is_standard():
        result = ((t, domain.one()),)
    else:
        sign, sorted_t = _column_sorted(t)
        if sorted_t != t:
            inner = _straighten_tableau(sorted_t, domain, policy)
            result = inner if sign == 1 else tuple((u, -c) for u, c in inner)
        else:
            r, c = _row_violation(t, policy)
            relation = garnir_relation_terms(t, r, c, domain)
            acc: dict[Tableau, object] = {}
            for candidate, coeff in relation.items():
                if candidate == t:
                    continue
                for u, inner_c in _straighten_tableau(candidate, domain, policy):
                    acc[u] = acc.get(u, domain.zero()) - coeff * inner_c
            result = tuple(
                (u, coeff) for u, coeff in sorted(acc.items(), key=lambda kv: str(kv[0]))
                if coeff
            )
    if policy == TOPMOST:
        _STRAIGHTEN_CACHE[key] = result
    return result


def _fold_terms(pairs: Iterable[tuple[Tableau, object]], scale, acc: dict, domain):
    for t, c in pairs:
        value = acc.get(t, domain.zero()) + scale * c
        if value:
            acc[t] = value
        elif t in acc:
            del acc[t]


def _straighten_terms(terms: Mapping[Tableau, object], domain: ScalarDomain,
                      policy: str = TOPMOST) -> dict[Tableau, object]:
    acc: dict[Tableau, object] = {}
    for t, c in terms.items():
        _fold_terms(_straighten_tableau(t, domain, policy), c, acc, domain)
    return acc


def straighten(v: TableauVector, policy: str = TOPMOST) -> SpechtVector:
    """Rewrite a tableau vector in the standard basis.

    The result is independent of the Garnir pair-selection policy; the
    `policy` knob exists so tests can confirm that.
    """
    terms = _straighten_terms(v.terms, v.domain, policy)
    return SpechtVector.from_terms(v.shape, terms, v.domain)


def _act_generator_terms(i: int, terms: Mapping[Tableau, object],
                         domain: ScalarDomain) -> dict[Tableau, object]:
    acc: dict[Tableau, object] = {}
    q = domain.q()
    q_minus_1 = q - domain.one()
    for t, c in terms.items():
        x = t.with_swapped(i, i + 1)
        if precedes(i, i + 1, t):
            _fold_terms(_straighten_tableau(x, domain), c, acc, domain)
        else:
            _fold_terms(_straighten_tableau(x, domain), q * c, acc, domain)
            _fold_terms(_straighten_tableau(t, domain), q_minus_1 * c, acc, domain)
    return acc


def _act_word_terms(word: Iterable[int], terms: Mapping[Tableau, object],
                    domain: ScalarDomain) -> dict[Tableau, object]:
    terms = dict(terms)
    for i in reversed(tuple(word)):
        terms = _act_generator_terms(i, terms, domain)
    return terms


def _check_generator_index(i: int, n: int):
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")


def apply_generator(i: int, v: SpechtVector) -> SpechtVector:
    """The natural action of h_i, straightened back to the basis."""
    _check_generator_index(i, v.shape.n)
    terms = _act_generator_terms(i, v.terms(), v.domain)
    return SpechtVector.from_terms(v.shape, terms, v.domain)


def apply_word(word: Iterable[int], v: SpechtVector) -> SpechtVector:
    """Left action of h_{i1} h_{i2} ... h_{ik}, applied right to left."""
    word = tuple(word)
    for i in word:
        _check_generator_index(i, v.shape.n)
    terms = _act_word_terms(word, v.terms(), v.domain)
    return SpechtVector.from_terms(v.shape, terms, v.domain)


_MATRIX_CACHE: dict = {}


def generator_matrix(shape: Partition, i: int, domain: ScalarDomain = GENERIC) -> Matrix:
    """Matrix of h_i in the standard basis; columns are basis images."""
    _check_generator_index(i, shape.n)
    key = (shape, i, domain)
    cached = _MATRIX_CACHE.get(key)
    if cached is not None:
        return cached
    basis = enumerate_standard(shape)
    index = basis_index(shape)
    zero = domain.zero()
    grid = [[zero] * len(basis) for _ in basis]
    for j, t in enumerate(basis):
        for u, c in _act_generator_terms(i, {t: domain.one()}, domain).items():
            grid[index[u]][j] = c
    result = Matrix(domain, tuple(tuple(row) for row in grid))
    _MATRIX_CACHE[key] = result
    return result


def character_trace(shape: Partition, word: Iterable[int],
                    domain: ScalarDomain = GENERIC):
    """Trace of the represented word h_{i1}...h_{ik} on S^shape."""
    word = tuple(word)
    for i in word:
        _check_generator_index(i, shape.n)
    acc = domain.zero()
    for t in enumerate_standard(shape):
        image = _act_word_terms(word, {t: domain.one()}, domain)
        if t in image:
            acc = acc + image[t]
    return acc


@dataclass(frozen=True)
class ColumnElement:
    """The annihilator 1 + h_a for an entry a above a column bottom."""

    anchor: int

    def terms(self, domain: ScalarDomain) -> tuple[tuple[object, tuple[int, ...]], ...]:
        one = domain.one()
        return ((one, ()), (one, (self.anchor,)))

    def __str__(self):
        return f"1 + h{self.anchor}"


@dataclass(frozen=True)
class GarnirElement:
    """sum_d (-q)^(-l(d)) h(d) over minimal-length coset representatives.

    The identity coset carries coefficient 1; `rendered()` multiplies by
    q^(max length) so the coefficients become +-q^(l_max - l(d)).
    Annihilation is unaffected by that unit.
    """

    anchor: int
    words: tuple[tuple[int, ...], ...]

    def max_length(self) -> int:
        return max(len(w) for w in self.words)

    def terms(self, domain: ScalarDomain) -> tuple[tuple[object, tuple[int, ...]], ...]:
        return tuple((domain.neg_q_power(-len(w)), w) for w in self.words)

    def rendered(self) -> str:
        l_max = self.max_length()
        parts = []
        for w in sorted(self.words, key=lambda w: (len(w), w)):
            exponent = l_max - len(w)
            sign = -1 if len(w) % 2 else 1
            pieces = []
            if exponent:
                pieces.append("q" if exponent == 1 else f"q^{exponent}")
            pieces.extend(f"h{i}" for i in w)
            body = "*".join(pieces) if pieces else "1"
            if not parts:
                parts.append(f"-{body}" if sign < 0 else body)
            else:
                parts.append(f"- {body}" if sign < 0 else f"+ {body}")
        return " ".join(parts)

    def __str__(self):
        return self.rendered()


def column_elements(shape: Partition) -> tuple[ColumnElement, ...]:
    """One element per superstandard entry not at the bottom of its column."""
    base = superstandard(shape)
    heights = shape.column_heights()
    anchors = []
    for c, height in enumerate(heights):
        for r in range(height - 1):
            anchors.append(base.entry(r, c))
    return tuple(ColumnElement(a) for a in sorted(anchors))


def garnir_anchors(shape: Partition) -> tuple[int, ...]:
    """Superstandard entries not at the end of their row."""
    base = superstandard(shape)
    return tuple(sorted(v for row in base.rows for v in row[:-1]))


def garnir_element(shape: Partition, a: int) -> GarnirElement:
    """The Garnir annihilator anchored at the superstandard entry a."""
    base = superstandard(shape)
    r, c = base.position(a)
    if c + 1 >= len(base.rows[r]):
        raise ValueError(f"entry {a} is at the end of its row in {base}")
    d = base.entry(r, c + 1)
    heights = shape.column_heights()
    b = base.entry(heights[c] - 1, c)
    # the interval {a..d} splits as {a..b} and {b+1..d}; minimal coset
    # representatives are increasing on both blocks
    left_size = b - a + 1
    span = list(range(a, d + 1))
    words = []
    for left_image in combinations(span, left_size):
        right_image = [v for v in span if v not in left_image]
        images = list(range(1, shape.n + 1))
        for offset, v in enumerate(left_image):
            images[a + offset - 1] = v
        for offset, v in enumerate(right_image):
            images[b + 1 + offset - 1] = v
        words.append(reduced_word(Permutation(tuple(images))))
    words.sort(key=lambda w: (len(w), w))
    return GarnirElement(anchor=a, words=tuple(words))


def garnir_elements(shape: Partition) -> tuple[GarnirElement, ...]:
    return tuple(garnir_element(shape, a) for a in garnir_anchors(shape))


def _apply_element_terms(element_terms, start: Mapping[Tableau, object],
                         domain: ScalarDomain) -> dict[Tableau, object]:
    acc: dict[Tableau, object] = {}
    for coeff, word in element_terms:
        image = _act_word_terms(word, start, domain)
        _fold_terms(image.items(), coeff, acc, domain)
    return acc


def annihilator_matrix(element, shape_of_module: Partition,
                       domain: ScalarDomain = GENERIC) -> Matrix:
    """Matrix of a column/Garnir element acting on S^shape_of_module.

    `element` may also be a raw iterable of (scalar, word) pairs.
    """
    element_terms = element.terms(domain) if hasattr(element, "terms") else tuple(element)
    n = shape_of_module.n
    for _, word in element_terms:
        for i in word:
            _check_generator_index(i, n)
    basis = enumerate_standard(shape_of_module)
    index = basis_index(shape_of_module)
    zero = domain.zero()
    grid = [[zero] * len(basis) for _ in basis]
    for j, t in enumerate(basis):
        image = _apply_element_terms(element_terms, {t: domain.one()}, domain)
        for u, coeff in image.items():
            grid[index[u]][j] = coeff
    return Matrix(domain, tuple(tuple(row) for row in grid))


def annihilator_checks(shape: Partition,
                       domain: ScalarDomain = GENERIC) -> list[tuple[str, bool]]:
    """Each column/Garnir element applied to the superstandard vector."""
    start = {superstandard(shape): domain.one()}
    checks = []
    for element in column_elements(shape):
        image = _apply_element_terms(element.terms(domain), start, domain)
        checks.append((f"column element {element}", not image))
    for element in garnir_elements(shape):
        image = _apply_element_terms(element.terms(domain), start, domain)
        checks.append((f"garnir element a={element.anchor}", not image))
    return checks


def verify_annihilators(shape: Partition, domain: ScalarDomain = GENERIC) -> bool:
    """True iff every column and Garnir element kills the generator vector."""
    return all(ok for _, ok in annihilator_checks(shape, domain))


def defining_relation_checks(shape: Partition,
                             domain: ScalarDomain = GENERIC) -> list[tuple[str, bool]]:
    """Quadratic, braid and commutation relations as exact matrix identities."""
    n = shape.n
    dim = len(enumerate_standard(shape))
    q = domain.q()
    q_minus_1 = q - domain.one()
    identity = Matrix.identity(domain, dim)
    mats = {i: generator_matrix(shape, i, domain) for i in range(1, n)}
    checks = []
    for i in range(1, n):
        lhs = mats[i] * mats[i]
        rhs = mats[i].scale(q_minus_1) + identity.scale(q)
        checks.append((f"quadratic h{i}", lhs == rhs))
    for i in range(1, n - 1):
        lhs = mats[i] * mats[i + 1] * mats[i]
        rhs = mats[i + 1] * mats[i] * mats[i + 1]
        checks.append((f"braid h{i},h{i + 1}", lhs == rhs))
    for i in range(1, n):
        for j in range(i + 2, n):
            checks.append((f"commutation h{i},h{j}", mats[i] * mats[j] == mats[j] * mats[i]))
    return checks


def generator_relation_checks(shape: Partition,
                              domain: ScalarDomain = GENERIC) -> list[tuple[str, bool]]:
    """The same relations, applied to the cyclic generator vector only.

    Complete on the generator orbit but not on the whole module; used by
    the CLI when the module is too large for matrix identities.
    """
    start = {superstandard(shape): domain.one()}
    n = shape.n
    q = domain.q()
    q_minus_1 = q - domain.one()
    checks = []
    for i in range(1, n):
        lhs = _act_word_terms((i, i), start, domain)
        rhs = {t: q_minus_1 * c for t, c in _act_word_terms((i,), start, domain).items()}
        _fold_terms(start.items(), q, rhs, domain)
        rhs = {t: c for t, c in rhs.items() if c}
        checks.append((f"quadratic h{i} (generator vector)", lhs == rhs))
    for i in range(1, n - 1):
        lhs = _act_word_terms((i, i + 1, i), start, domain)
        rhs = _act_word_terms((i + 1, i, i + 1), start, domain)
        checks.append((f"braid h{i},h{i + 1} (generator vector)", lhs == rhs))
    for i in range(1, n):
        for j in range(i + 2, n):
            lhs = _act_word_terms((i, j), start, domain)
            rhs = _act_word_terms((j, i), start, domain)
            checks.append((f"commutation h{i},h{j} (generator vector)", lhs == rhs))
    return checks
