import pytest

from qdissect import oracle
from qdissect.oracle import (Overpartition, count_A, count_A_bar, count_B,
                             count_B_bar, count_overpartitions,
                             count_overpartitions_memo, iter_overpartitions,
                             iter_partitions, s_count)
from qdissect.products import (GordonParams, bressoud_product,
                               overpartition_gf, rrg_overpartition_product,
                               s_gf, singular_gf)

GRID = GordonParams.grid([2, 3, 4])


def test_overpartitions_of_three():
    assert count_overpartitions(3) == 8
    assert sorted(str(o) for o in iter_overpartitions(3)) == sorted(
        ["1 + 1 + 1", "[1] + 1 + 1", "2 + 1", "[2] + 1", "2 + [1]",
         "[2] + [1]", "3", "[3]"])


def test_empty_overpartition():
    assert count_overpartitions(0) == 1
    assert [o.weight for o in iter_overpartitions(0)] == [0]


def test_counts_match_series():
    gf = overpartition_gf(oracle.DESK_SCALE)
    for n in range(oracle.DESK_SCALE + 1):
        assert count_overpartitions(n) == gf.coeff(n)


def test_memo_agrees_with_enumeration():
    assert [count_overpartitions_memo(n) for n in range(21)] == \
        [count_overpartitions(n) for n in range(21)]


def test_overpartitions_distinct_and_weighted():
    ops = list(iter_overpartitions(9))
    assert len(set(ops)) == len(ops)
    assert all(o.weight == 9 for o in ops)


def test_frequency_profile():
    # mult counts every copy, the overlined one included
    op = Overpartition(((5, 1, True), (3, 2, True), (1, 1, False)))
    assert op.weight == 12
    pr = op.profile()
    assert (pr.f(3), pr.fbar(3), pr.f(1), pr.fbar(1)) == (1, 1, 1, 0)
    assert [pr.V(l) for l in range(7)] == [0, 0, 0, 1, 1, 2, 2]
    for l in range(1, 7):
        assert pr.V(l) - pr.V(l - 1) == pr.fbar(l)


def test_partitions():
    assert sorted(iter_partitions(4)) == sorted(
        [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])
    assert list(iter_partitions(5, largest=2)) == \
        [(2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]


def test_a_bar_parts_not_divisible_by_k():
    p = GordonParams(3, 3, 1)
    assert count_A_bar(p, 3) == singular_gf(3, 1, 3).coeff(3)
    assert count_A_bar(p, 0) == 1


def test_a_bar_against_s_gf():
    s = s_gf(4, 1, 20)
    p = GordonParams(2, 1, 1)
    assert [count_A_bar(p, n) for n in range(21)] == s.coefficients()


def test_b_bar_golden():
    p = GordonParams(2, 1, 0)
    # only "2" qualifies among 2, [2], 1+1, [1]+1
    assert count_B_bar(p, 2) == 1
    assert [count_B_bar(p, n) for n in range(8)] == [1, 1, 1, 2, 2, 3, 4, 5]
    assert count_B_bar(p, 0) == 1


@pytest.mark.parametrize("p", GRID, ids=str)
def test_overlined_equinumerous(p):
    prod = rrg_overpartition_product(p, 14)
    for n in range(15):
        a = count_A_bar(p, n)
        assert a == count_B_bar(p, n) == prod.coeff(n)


@pytest.mark.parametrize("p", GRID, ids=str)
def test_plain_equinumerous(p):
    prod = bressoud_product(p, 16)
    for n in range(17):
        assert count_A(p, n) == count_B(p, n) == prod.coeff(n)


def test_rogers_ramanujan():
    p = GordonParams(2, 2, 1)
    for n in range(16):
        want = sum(1 for parts in iter_partitions(n)
                   if all(v % 5 in (1, 4) for v in parts))
        assert count_A(p, n) == want
    assert count_A(p, 0) == count_B(p, 0) == 1


@pytest.mark.parametrize("K,i", [(K, i) for K in range(2, 9)
                                 for i in range(1, K // 2 + 1)])
def test_s_count_matches_series(K, i):
    top = 16
    s = s_gf(K, i, top)
    assert [s_count(K, i, n) for n in range(top + 1)] == s.coefficients()


@pytest.mark.parametrize("K,i", [(6, 3), (5, 1)])
def test_s_count_examples(K, i):
    s = s_gf(K, i, 25)
    assert [s_count(K, i, n) for n in range(26)] == s.coefficients()


def test_s_count_range():
    assert s_count(9, 4, 0) == 1
    with pytest.raises(ValueError):
        s_count(6, 4, 3)
