"""Acceptance suite: one test per criterion, printing one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete.  Every comparison is exact; the printed timings are informative.
"""

import random
import time
from contextlib import contextmanager

from qspecht.combinat import (
    Partition,
    Tableau,
    enumerate_standard,
    hook_count,
)
from qspecht.linalg import Matrix, specialize_matrix
from qspecht.roots import (
    analyze,
    enumerate_p_root_standard,
    find_submodule_generators,
    irreducible_dimension,
    is_p_regular,
    is_p_root_standard,
    submodule_dimension,
)
from qspecht.scalar import GENERIC, LaurentScalar, root_of_unity
from qspecht.specht import (
    SpechtVector,
    defining_relation_checks,
    garnir_element,
    garnir_relation_terms,
    generator_matrix,
    verify_annihilators,
)


@contextmanager
def criterion(number, label):
    start = time.time()
    try:
        yield
    except BaseException:
        print(f"criterion {number:2d} FAIL  {label}")
        raise
    print(f"criterion {number:2d} PASS  {label}  ({time.time() - start:.2f}s)")


def all_partitions(n, maxpart=None):
    if n == 0:
        yield ()
        return
    maxpart = maxpart or n
    for first in range(min(n, maxpart), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def two_row_shapes(max_n):
    for n in range(1, max_n + 1):
        for second in range(0, n // 2 + 1):
            yield Partition((n - second, second) if second else (n,))


def compose_word(word, n):
    images = list(range(1, n + 1))
    for i in reversed(word):
        images = [i + 1 if v == i else i if v == i + 1 else v for v in images]
    return tuple(images)


def test_criterion_01_generator_matrix_regression():
    with criterion(1, "5x5 generator matrix of h_1 on the (3,2) module"):
        expected = [
            ["-1", "-q^2", "0", "0", "q^4"],
            ["0", "q", "0", "0", "0"],
            ["0", "0", "-1", "-q^2", "-q^3"],
            ["0", "0", "0", "q", "0"],
            ["0", "0", "0", "0", "q"],
        ]
        m = generator_matrix(Partition((3, 2)), 1, GENERIC)
        assert [[str(x) for x in row] for row in m.entries] == expected


def test_criterion_02_garnir_relation_regression():
    with criterion(2, "six-term Garnir relation with coefficients 1,-q,q^2,q^2,-q^3,q^4"):
        z = Tableau(((1, 2, 3, 10, 4, 12), (6, 8, 5), (9, 11, 7), (13,)))
        relation = garnir_relation_terms(z, 1, 1, GENERIC)
        expected = {
            "1,2,3,10,4,12/6,8,5/9,11,7/13": LaurentScalar(1),
            "1,2,3,10,4,12/6,5,8/9,11,7/13": LaurentScalar({1: -1}),
            "1,2,5,10,4,12/6,3,8/9,11,7/13": LaurentScalar({2: 1}),
            "1,2,3,10,4,12/6,5,11/9,8,7/13": LaurentScalar({2: 1}),
            "1,2,5,10,4,12/6,3,11/9,8,7/13": LaurentScalar({3: -1}),
            "1,2,8,10,4,12/6,3,11/9,5,7/13": LaurentScalar({4: 1}),
        }
        assert {str(t): c for t, c in relation.items()} == expected


def test_criterion_03_garnir_element_regression():
    with criterion(3, "rendered annihilator elements G6, G8, G11 of (6,3,3,1)"):
        shape = Partition((6, 3, 3, 1))
        displayed = {
            6: "q^4 - q^3*h7 + q^2*h6*h7 + q^2*h8*h7 - q*h6*h8*h7 + h7*h6*h8*h7",
            8: "q^3 - q^2*h10 + q*h9*h10 - h8*h9*h10",
            11: "q - h11",
        }
        displayed_words = {
            6: [((), 4), ((7,), 3), ((6, 7), 2), ((8, 7), 2), ((6, 8, 7), 1),
                ((7, 6, 8, 7), 0)],
            8: [((), 3), ((10,), 2), ((9, 10), 1), ((8, 9, 10), 0)],
            11: [((), 1), ((11,), 0)],
        }
        for anchor, text in displayed.items():
            element = garnir_element(shape, anchor)
            assert element.rendered() == text
            # structural identity: same coefficient on each composed permutation
            l_max = element.max_length()
            mine = {
                compose_word(w, shape.n):
                    LaurentScalar.q_power(l_max) * LaurentScalar.neg_q_power(-len(w))
                for w in element.words
            }
            theirs = {
                compose_word(w, shape.n):
                    LaurentScalar({e: -1 if len(w) % 2 else 1})
                for w, e in displayed_words[anchor]
            }
            assert mine == theirs


def test_criterion_04_relation_suite():
    with criterion(4, "defining relations + annihilators for every shape of n <= 6"):
        for n in range(2, 7):
            for parts in all_partitions(n):
                shape = Partition(parts)
                checks = defining_relation_checks(shape, GENERIC)
                assert all(ok for _, ok in checks), (shape, checks)
                assert verify_annihilators(shape, GENERIC), shape


def test_criterion_05_decomposition_table():
    with criterion(5, "two-row reducibility table at roots of unity"):
        rows = [
            ((5, 4), 3, True, (6, 3)),
            ((6, 4), 3, False, None),
            ((7, 4), 3, True, (9, 2)),
            ((8, 3), 3, False, None),
            ((8, 2), 5, False, None),
            ((9, 3), 5, True, (12,)),
        ]
        for parts, p, reducible, mu in rows:
            report = analyze(Partition(parts), p)
            assert report.reducible is reducible, (parts, p)
            if reducible:
                assert report.submodule_shape == Partition(mu), (parts, p)


def test_criterion_06_dimension_formula():
    with criterion(6, "dim of the (6,5) irreducible quotient at p=3 is 132+44-165-10=1"):
        for parts, count in [((6, 5), 132), ((9, 2), 44), ((7, 4), 165), ((10, 1), 10)]:
            shape = Partition(parts)
            assert hook_count(shape) == count
            assert len(enumerate_standard(shape)) == count
        assert irreducible_dimension(Partition((6, 5)), 3) == 132 + 44 - 165 - 10 == 1


def test_criterion_07_submodule_oracle_worked_example():
    with criterion(7, "(3,2) at p=3: kernel vector, submodule dim 4, quotient dim 1"):
        lam, mu = Partition((3, 2)), Partition((4, 1))
        domain = root_of_unity(3)
        generators = find_submodule_generators(lam, mu, 3)
        target = SpechtVector.from_terms(
            lam,
            {
                Tableau.parse("1,3,5/2,4"): domain.one(),
                Tableau.parse("1,3,4/2,5"): domain.one(),
            },
            domain,
        )
        assert target in generators
        sub_dim = submodule_dimension(lam, generators, 3)
        assert sub_dim == 4
        assert hook_count(lam) - sub_dim == 1


def test_criterion_08_p_root_standard_fixtures():
    with criterion(8, "(7,4) p=3: listed tableaux are/aren't p-root standard"):
        accepted = [
            "1,2,3,4,6,8,10/5,7,9,11",
            "1,3,4,5,6,7,11/2,8,9,10",
            "1,2,3,4,5,9,10/6,7,8,11",
        ]
        rejected = [
            "1,3,5,6,7,8,9/2,4,10,11",
            "1,3,4,5,6,7,10/2,8,9,11",
            "1,2,3,4,5,8,10/6,7,9,11",
        ]
        for text in accepted:
            assert is_p_root_standard(Tableau.parse(text), 3), text
        for text in rejected:
            assert not is_p_root_standard(Tableau.parse(text), 3), text


def test_criterion_09_tableau_count_equals_dimension():
    with criterion(9, "p-root tableau count = dimension formula, two rows, n <= 10"):
        for shape in two_row_shapes(10):
            for p in (3, 5, 7):
                count = len(enumerate_p_root_standard(shape, p))
                assert count == irreducible_dimension(shape, p), (shape, p)


def test_criterion_10_oracle_suite():
    with criterion(10, "oracle verdict matches the window criterion, two rows, n <= 8"):
        for shape in two_row_shapes(8):
            if shape.n < 2:
                continue
            for p in (3, 5):
                report = analyze(shape, p)
                hits = []
                for mu in two_row_shapes(shape.n):
                    if mu.n != shape.n or mu == shape or not is_p_regular(mu, p):
                        continue
                    if find_submodule_generators(shape, mu, p):
                        hits.append(mu)
                if report.reducible:
                    assert hits == [report.submodule_shape], (shape, p, hits)
                    generators = find_submodule_generators(shape, report.submodule_shape, p)
                    sub_dim = submodule_dimension(shape, generators, p)
                    assert sub_dim == report.submodule_dim, (shape, p)
                    assert sub_dim + report.quotient_dim == report.specht_dim, (shape, p)
                else:
                    assert hits == [], (shape, p, hits)


def test_criterion_11_specialization_coherence():
    with criterion(11, "specializing generic matrices = computing natively at the root"):
        rng = random.Random(2024)
        shapes = [Partition(parts) for n in range(2, 7) for parts in all_partitions(n)]
        for _ in range(20):
            shape = rng.choice(shapes)
            i = rng.randrange(1, shape.n)
            p = rng.choice([3, 5])
            native = generator_matrix(shape, i, root_of_unity(p))
            lifted = specialize_matrix(generator_matrix(shape, i, GENERIC), p)
            assert native == lifted, (shape, i, p)
            assert isinstance(native, Matrix)
