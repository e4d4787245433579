import itertools

import pytest

from troupes.partitions import (
    SetPartition,
    classify,
    druns,
    druns_in_order,
    is_interval,
    is_irreducible,
    is_noncrossing,
    iter_D,
    iter_partitions,
    iter_sigma_first_n,
    parse_partition,
)

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147]  # B_0..B_9
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]  # C_0..C_9


# Brute-force definitional oracles, used to cross-check the fast predicates.


def oracle_interval(p):
    rel = {(i, j) for b in p.blocks for i in b for j in b}
    return not any(
        (i, k) in rel and (i, j) not in rel
        for i, j, k in itertools.combinations(range(1, p.n + 1), 3)
    )


def oracle_noncrossing(p):
    rel = {(i, j) for b in p.blocks for i in b for j in b}
    return not any(
        (i, k) in rel and (j, l) in rel and (i, j) not in rel
        for i, j, k, l in itertools.combinations(range(1, p.n + 1), 4)
    )


def test_classify_examples():
    p = SetPartition.of(3, [[1, 2, 3]])
    assert classify(p) == (True, True, True)
    p = SetPartition.of(4, [[1, 3], [2, 4]])
    assert not is_noncrossing(p)
    p = SetPartition.of(3, [[1, 3], [2]])
    flags = classify(p)
    assert flags.noncrossing and flags.irreducible and not flags.interval


def test_predicates_match_definitions():
    for n in range(1, 8):
        for p in iter_partitions(n):
            assert is_interval(p) == oracle_interval(p)
            assert is_noncrossing(p) == oracle_noncrossing(p)


def test_singleton_partition_of_one_is_irreducible():
    assert is_irreducible(SetPartition.of(1, [[1]]))


def test_counts():
    for n in range(1, 10):
        assert sum(1 for _ in iter_partitions(n)) == BELL[n]
        assert sum(1 for _ in iter_partitions(n, "noncrossing")) == CATALAN[n]
        assert sum(1 for _ in iter_partitions(n, "interval")) == 2 ** (n - 1)


def test_example_counts():
    assert sum(1 for _ in iter_partitions(4)) == 15
    assert sum(1 for _ in iter_partitions(4, "noncrossing")) == 14
    got = [str(p) for p in iter_partitions(3, "nc_irreducible")]
    assert sorted(got) == ["{{1,2,3}}", "{{1,3},{2}}"]


def test_interval_implies_noncrossing():
    for n in range(1, 9):
        for p in iter_partitions(n, "interval"):
            assert is_noncrossing(p)


def test_min2_class():
    for n in range(2, 8):
        for p in iter_partitions(n, "nc_irreducible_min2"):
            assert all(len(b) >= 2 for b in p.blocks)
            assert is_irreducible(p)
    assert list(iter_partitions(1, "nc_irreducible_min2")) == []


def test_no_duplicates_in_enumeration():
    for n in range(1, 8):
        out = [str(p) for p in iter_partitions(n)]
        assert len(out) == len(set(out))


# -- descending runs


def test_druns_displayed_example():
    got = druns((8, 5, 4, 7, 9, 1, 6, 3, 2))
    assert got == SetPartition.of(9, [[4, 5, 8], [7], [1, 9], [2, 3, 6]])


def test_druns_trivial():
    assert druns((1, 2, 3)).blocks == ((1,), (2,), (3,))
    assert druns((3, 2, 1)).blocks == ((1, 2, 3),)


def test_druns_block_count():
    for sigma in itertools.permutations(range(1, 7)):
        des = sum(1 for i in range(5) if sigma[i] > sigma[i + 1])
        assert len(druns(sigma).blocks) == 6 - des


def test_druns_reconstruction():
    for n in range(1, 7):
        for sigma in itertools.permutations(range(1, n + 1)):
            rebuilt = tuple(
                x
                for block in druns_in_order(sigma)
                for x in sorted(block, reverse=True)
            )
            assert rebuilt == sigma


def test_iter_D_small():
    assert list(iter_D(2)) == [(2, 1)]
    assert list(iter_D(3)) == [(3, 2, 1)]
    assert sorted(iter_D(4)) == [(4, 1, 3, 2), (4, 2, 3, 1), (4, 3, 2, 1)]


def test_iter_D_membership():
    for n in range(2, 8):
        members = set(iter_D(n))
        for sigma in iter_sigma_first_n(n):
            expected = all(len(b) >= 2 for b in druns(sigma).blocks)
            assert (sigma in members) == expected


def test_D_first_block_contains_n():
    for n in range(2, 8):
        for sigma in iter_D(n):
            first = druns_in_order(sigma)[0]
            assert n in first and len(first) >= 2


def test_branch_tuple_tally_for_D4():
    # sum over the restricted permutations of 2^(run size - 2) products = 3!
    total = 0
    for sigma in iter_D(4):
        prod = 1
        for b in druns(sigma).blocks:
            prod *= 2 ** (len(b) - 2)
        total += prod
    assert total == 6


# -- serialization


def test_str_and_parse():
    p = SetPartition.of(4, [[2, 4], [1], [3]])
    assert str(p) == "{{1},{2,4},{3}}"
    assert parse_partition(str(p)) == p


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_partition("{1,2}")
    with pytest.raises(ValueError):
        parse_partition("{{1,2},{2}}")


def test_of_validates():
    with pytest.raises(ValueError):
        SetPartition.of(3, [[1, 2]])
    with pytest.raises(ValueError):
        SetPartition.of(2, [[1, 2], []])
