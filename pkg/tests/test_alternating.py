import math

import pytest
from sympy.functions.combinatorial.numbers import partition
from hypothesis import given, strategies as st
from sympy.utilities.iterables import partitions as sympy_partitions

from cdverify import alternating
from cdverify.alternating import Partition
from cdverify.errors import CapExceeded


def test_partition_counts():
    assert [p.parts for p in alternating.partitions(1)] == [(1,)]
    assert len(alternating.partitions(5)) == 7
    assert len(alternating.partitions(10)) == 42
    with pytest.raises(CapExceeded):
        alternating.partitions(41)


def test_partition_order_is_lex_descending():
    parts = [p.parts for p in alternating.partitions(8)]
    assert parts == sorted(parts, reverse=True)
    assert parts[0] == (8,) and parts[-1] == (1,) * 8


def test_partitions_match_sympy():
    for n in range(1, 16):
        ours = {p.parts for p in alternating.partitions(n)}
        theirs = {
            tuple(sorted((k for k, m in d.items() for _ in range(m)), reverse=True))
            for d in sympy_partitions(n)
        }
        assert ours == theirs


def test_hook_examples():
    assert alternating.hook_degree(Partition((6,))) == 1
    assert alternating.hook_degree(Partition((2, 1))) == 2
    assert alternating.hook_degree(Partition((3, 2))) == 5


def test_max_degree_examples():
    assert alternating.max_degree_alternating(5) == 5
    assert alternating.max_degree_alternating(7) == 35
    assert alternating.max_degree_alternating(10) == 567
    assert alternating.max_degree_alternating(10) >= 2**9


def test_alternating_degree_sets():
    assert alternating.alternating_degrees(5) == [1, 3, 4, 5]
    assert alternating.alternating_degrees(6) == [1, 5, 8, 9, 10]


def test_column_sum():
    for n in range(1, 15):
        total = sum(alternating.hook_degree(p) ** 2 for p in alternating.partitions(n))
        assert total == math.factorial(n)


def test_alternating_column_sum():
    # a conjugate pair restricts to one character, a self-conjugate label
    # splits into two of half degree; the squares sum to |A_n|
    for n in range(5, 13):
        doubled = 0
        for p in alternating.partitions(n):
            d = alternating.hook_degree(p)
            if p == alternating.conjugate(p):
                doubled += 4 * (d // 2) ** 2
            else:
                doubled += d**2
        assert doubled == math.factorial(n)


def test_conjugation_symmetry():
    for n in range(1, 15):
        for p in alternating.partitions(n):
            assert alternating.hook_degree(p) == alternating.hook_degree(alternating.conjugate(p))


def test_partition_count_recurrence():
    for n in range(0, 101):
        assert alternating.partition_count(n) == partition(n)
    for n in range(1, 26):
        assert alternating.partition_count(n) == len(alternating.partitions(n))


def test_monotone():
    for n in range(6, 26):
        assert alternating.max_degree_alternating(n) >= alternating.max_degree_alternating(n - 1)


def test_lemma_rows():
    rows = alternating.verify_an_lemma(5, 100)
    assert all(r.status == "pass" for r in rows if r.n >= 10)
    by_n = {r.n: r for r in rows}
    assert by_n[9].status == "not-applicable"
    assert by_n[18].factorial is True
    assert all(by_n[n].direct for n in range(10, 18))
    assert by_n[50].direct is None


def test_lemma_cap():
    with pytest.raises(CapExceeded):
        alternating.verify_an_lemma(5, 101)


@given(st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=6))
def test_hook_degree_divides_factorial(parts):
    lam = Partition(tuple(sorted(parts, reverse=True)))
    d = alternating.hook_degree(lam)
    assert math.factorial(lam.n) % d == 0
    assert alternating.conjugate(alternating.conjugate(lam)) == lam


def test_invalid_partition():
    with pytest.raises(ValueError):
        Partition((1, 2))
