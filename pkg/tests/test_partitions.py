import random
from itertools import product
from math import gcd

import pytest
from hypothesis import given, strategies as st

from primgen.partitions import (
    classify_partition,
    equal_sum_grouping,
    find_m_partition,
    find_special_m_partition,
    is_distinct_relatively_prime,
    nontrivial_divisors,
    oracle_grouping_exists,
)

from conftest import distinct_partitions

ELABORATE = [1, 2, 5, 7, 17, 19, 23, 111]


@pytest.mark.parametrize("parts, expected", [
    ([2, 3, 5], True),
    (ELABORATE, True),
    ([2, 4], False),
    ([1, 1, 3], False),
    ([1, 1], False),
    ([7], True),
    ([1, 6], True),
    ([3, 5, 9], False),
    ([3, 5, 8], True),
])
def test_is_distinct_relatively_prime(parts, expected):
    assert is_distinct_relatively_prime(parts) is expected


def test_m_partition_ten():
    cert = find_m_partition([2, 5, 3])
    assert cert.m == 5 and cert.k == 2
    assert sorted(map(sorted, cert.group_values())) == [[2, 3], [5]]
    assert cert.verify()


@pytest.mark.parametrize("d", range(3, 40))
def test_one_and_rest_is_never_m_partition(d):
    assert find_m_partition([1, d - 1]) is None
    assert find_special_m_partition([1, d - 1]) is None


def test_thirty_is_not_m_partition():
    # the part 25 is larger than every proper divisor m of 30
    assert find_m_partition([2, 3, 25]) is None
    for m in (2, 3, 5, 6, 10, 15):
        assert not oracle_grouping_exists([2, 3, 25], m, 30 // m)


def test_special_fifteen():
    cert = find_special_m_partition([2, 3, 10])
    assert cert.m == 5 and cert.largest_part == 10 and cert.k == 1
    assert cert.group_values() == [[2, 3]]
    assert cert.verify()
    # one group is outside the literal 1 < k < l - 1 range
    assert not cert.verify(strict=True)
    assert find_special_m_partition([2, 3, 10], strict=True) is None


def test_special_elaborate():
    cert = find_special_m_partition(ELABORATE)
    assert cert.m == 37 and cert.k == 2 and cert.largest_part == 111
    assert sorted(map(sorted, cert.group_values())) == [[1, 17, 19], [2, 5, 7, 23]]
    assert cert.verify()
    assert cert.verify(strict=True)


def test_special_absent_for_ten():
    assert find_special_m_partition([2, 3, 5]) is None


def test_special_thirty():
    cert = find_special_m_partition([25, 2, 3])
    assert cert.m == 5 and cert.largest_part_index == 0
    assert cert.group_values() == [[2, 3]]


def test_non_distinct_rejected():
    with pytest.raises(ValueError):
        find_m_partition([1, 1, 2])
    with pytest.raises(ValueError):
        find_special_m_partition([2, 2, 6])


def test_classify_partition_flags():
    c = classify_partition([1, 1, 4])
    assert not c.distinct and c.m_partition is None and c.special_m_partition is None
    c = classify_partition([2, 3, 25])
    assert c.relatively_prime and c.m_partition is None and c.special_m_partition.m == 5


def test_oracle_examples():
    assert oracle_grouping_exists([2, 5, 3], 5, 2)
    assert oracle_grouping_exists([2, 3], 5, 1)
    assert not oracle_grouping_exists([2, 3, 25], 15, 2)
    assert not oracle_grouping_exists([1, 2, 3], 3, 3)
    assert oracle_grouping_exists([], 4, 0)


def test_oracle_part_bound():
    with pytest.raises(ValueError):
        oracle_grouping_exists(list(range(1, 14)), 7, 13)


def _brute_force_groupings(parts, m, k):
    """Try every labelling of parts by groups 0..k-1."""
    for labels in product(range(k), repeat=len(parts)):
        sums = [0] * k
        for p, g in zip(parts, labels):
            sums[g] += p
        if all(s == m for s in sums):
            return True
    return False


@pytest.mark.parametrize("seed", range(40))
def test_oracle_against_label_enumeration(seed):
    rng = random.Random(seed)
    parts = rng.sample(range(1, 13), rng.randint(1, 6))
    d = sum(parts)
    for m in [x for x in range(1, d + 1) if d % x == 0]:
        k = d // m
        if k ** len(parts) > 50000:
            continue
        assert oracle_grouping_exists(parts, m, k) == _brute_force_groupings(parts, m, k)


def _expected_m(parts):
    d, l = sum(parts), len(parts)
    return any(1 < d // m < l and oracle_grouping_exists(parts, m, d // m)
               for m in nontrivial_divisors(d))


def _expected_special(parts, strict=False):
    d, l = sum(parts), len(parts)
    if l < 2:
        return False
    top = max(parts)
    rest = sorted(parts)[:-1]
    for m in nontrivial_divisors(d):
        if top % m or m >= top:
            continue
        k = (d - top) // m
        if k < 1 or (strict and not 1 < k < l - 1):
            continue
        if oracle_grouping_exists(rest, m, k):
            return True
    return False


@pytest.mark.parametrize("d", range(2, 26))
def test_finders_match_oracle_small(d):
    for parts in distinct_partitions(d):
        m_cert = find_m_partition(parts)
        assert (m_cert is not None) == _expected_m(parts)
        if m_cert:
            assert m_cert.verify()
        for strict in (False, True):
            s_cert = find_special_m_partition(parts, strict=strict)
            assert (s_cert is not None) == _expected_special(parts, strict)
            if s_cert:
                assert s_cert.verify(strict=strict)


@given(st.sets(st.integers(1, 40), min_size=2, max_size=7), st.randoms(use_true_random=False))
def test_finders_invariant_under_reordering(parts, rnd):
    parts = sorted(parts)
    shuffled = parts[:]
    rnd.shuffle(shuffled)
    assert is_distinct_relatively_prime(parts) == is_distinct_relatively_prime(shuffled)
    a, b = find_m_partition(parts), find_m_partition(shuffled)
    assert (a is None) == (b is None)
    if a:
        assert a.m == b.m and b.verify()
        assert sorted(map(sorted, a.group_values())) == sorted(map(sorted, b.group_values()))
    a, b = find_special_m_partition(parts), find_special_m_partition(shuffled)
    assert (a is None) == (b is None)
    if a:
        assert a.m == b.m and b.verify()


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_gcd_lemma(n1, n2):
    if gcd(n1, n2) == 1:
        assert gcd(n1, n1 + n2) == 1 == gcd(n2, n1 + n2)


@given(st.integers(1, 200), st.integers(1, 200))
def test_two_coprime_parts_have_no_certificates(n1, n2):
    if n1 != n2 and gcd(n1, n2) == 1:
        assert find_m_partition([n1, n2]) is None
        assert find_special_m_partition([n1, n2]) is None


def test_grouping_search_determinism():
    # largest parts first, first group with room
    groups = equal_sum_grouping([1, 2, 5, 7, 17, 19, 23], range(7), 37, 2)
    assert groups == ((1, 2, 3, 6), (0, 4, 5))
