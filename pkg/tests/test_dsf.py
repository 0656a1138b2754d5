import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from fdrepair import DisjointSetForest


def test_makeset_self_root():
    d = DisjointSetForest()
    d.makeset(1)
    assert d.find(1) == 1


def test_makeset_counts():
    d = DisjointSetForest(range(10))
    assert d.class_count == 10


def test_makeset_duplicate_rejected():
    d = DisjointSetForest([1])
    with pytest.raises(ValueError):
        d.makeset(1)


def test_union_connects():
    d = DisjointSetForest([1, 2])
    assert d.union(1, 2)
    assert d.find(1) == d.find(2)


def test_union_same_element():
    d = DisjointSetForest([1])
    assert not d.union(1, 1)


def test_union_decrements_class_count():
    d = DisjointSetForest([1, 2])
    d.union(1, 2)
    assert d.class_count == 1


def test_find_unknown():
    with pytest.raises(KeyError):
        DisjointSetForest().find(3)


def example_forest():
    d = DisjointSetForest(range(1, 7))
    for a, b in [(1, 2), (2, 3), (3, 4), (5, 6)]:
        d.union(a, b)
    return d


def test_paper_style_classes():
    d = example_forest()
    assert d.classes() == [[1, 2, 3, 4], [5, 6]]
    assert d.find(3) == d.find(1)
    assert d.find(5) == d.find(6)
    assert d.find(1) != d.find(5)
    assert d.class_count == 2


def test_classes_fresh():
    assert DisjointSetForest([1, 2]).classes() == [[1], [2]]


def test_classes_all_union():
    d = DisjointSetForest(range(5))
    for i in range(4):
        d.union(i, i + 1)
    assert d.classes() == [list(range(5))]


class QuotientOracle:
    """Naive quotient-set model of union-find."""

    def __init__(self, elements):
        self.sets = [{e} for e in elements]

    def union(self, a, b):
        sa = next(s for s in self.sets if a in s)
        sb = next(s for s in self.sets if b in s)
        if sa is sb:
            return
        self.sets.remove(sb)
        sa.update(sb)

    def classes(self):
        return sorted((sorted(s) for s in self.sets), key=lambda s: s[0])


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 100), st.lists(st.tuples(st.integers(0, 99),
                                               st.integers(0, 99)), max_size=200))
def test_matches_quotient_oracle(n, unions):
    d = DisjointSetForest(range(n))
    oracle = QuotientOracle(range(n))
    for a, b in unions:
        if a < n and b < n:
            d.union(a, b)
            oracle.union(a, b)
    assert d.classes() == oracle.classes()
    # find-equivalence is exactly oracle membership
    for cls in oracle.classes():
        roots = {d.find(x) for x in cls}
        assert len(roots) == 1


def workload(n, seed=0):
    rng = random.Random(seed)
    d = DisjointSetForest()
    for i in range(n):
        d.makeset(i)
    for _ in range(n):
        d.union(rng.randrange(n), rng.randrange(n))
    for _ in range(2 * n):
        d.find(rng.randrange(n))
    return d


@pytest.mark.slow
def test_near_linear_scaling():
    # n makesets + n unions + 2n finds should scale near-linearly; allow a
    # 2x departure from a linear fit between n=1e4 and n=1e6.
    workload(10**3)  # warm-up
    t0 = time.perf_counter()
    workload(10**4)
    small = time.perf_counter() - t0
    t0 = time.perf_counter()
    workload(10**6)
    big = time.perf_counter() - t0
    assert big <= 2 * 100 * small
