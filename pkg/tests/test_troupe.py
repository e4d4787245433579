import itertools
from functools import lru_cache

import pytest

from troupes.rings import q
from troupes.troupe import (
    all_trees,
    branch_series,
    builtin,
    color_constrained,
    color_count,
    from_table,
    full_trees,
    motzkin_trees,
    random_branch_table,
    right_two_monomial,
    tree_series,
    weighted_sum,
    weighted_sum_size,
)
from troupes.trees import (
    ColoredTree,
    EMPTY,
    encode,
    insert,
    is_full,
    is_motzkin,
    iter_bpt,
    iter_bpt_word,
    iter_branch_word,
    iter_branches,
    right_edges,
    two_child_count,
)


@lru_cache(maxsize=None)
def motzkin_number(n: int) -> int:
    """Independent oracle: M_n = M_(n-1) + sum M_k M_(n-2-k)."""
    if n <= 1:
        return 1
    return motzkin_number(n - 1) + sum(
        motzkin_number(k) * motzkin_number(n - 2 - k) for k in range(n - 1)
    )


def test_empty_tree_evaluates_to_zero():
    for tau in (all_trees(), full_trees(), motzkin_trees()):
        assert tau.evaluate(EMPTY) == 0


def test_branch_evaluates_to_its_weight():
    tau = right_two_monomial(q, 2)
    for n in range(1, 5):
        for b in iter_branches(n):
            assert tau.evaluate(b) == q ** (right_edges(b) + 1) * 2


def test_indicator_matches_direct_predicate():
    cases = [
        (all_trees(), lambda t: True),
        (full_trees(), is_full),
        (motzkin_trees(), is_motzkin),
    ]
    for n in range(1, 7):
        for t in iter_bpt(n):
            for tau, pred in cases:
                assert tau.evaluate(t) == (1 if pred(t) else 0)


def test_color_constrained_matches_direct_predicate():
    allowed = {0}
    tau = color_constrained(allowed)

    def pred(t: ColoredTree) -> bool:
        if t.box_color not in allowed:
            return False
        return all(
            nd.color in allowed for nd in t.nodes if nd.left is not None
        )

    for n in range(2, 6):
        for word in itertools.product((0, 1), repeat=n):
            for t in iter_bpt_word(word):
                assert tau.evaluate(t) == (1 if pred(t) else 0)


def test_color_count_matches_direct_count():
    counted = {1}
    tau = color_count(counted, q)
    for n in range(2, 6):
        for word in itertools.product((0, 1), repeat=n):
            for t in iter_bpt_word(word):
                k = sum(1 for nd in t.nodes if nd.color in counted)
                k += 1 if t.box_color in counted else 0
                assert tau.evaluate(t) == q ** k


def test_multiplicativity_exhaustive():
    taus = [all_trees(), full_trees(), motzkin_trees(), right_two_monomial(q, 1),
            from_table(random_branch_table(3, max_size=6))]
    for n1 in range(1, 7):
        for n2 in range(1, 8 - n1):
            for t1 in iter_bpt(n1):
                for t2 in iter_bpt(n2):
                    for v in range(n1):
                        t = insert(t1, v, t2)
                        for tau in taus:
                            assert tau.evaluate(t) == tau.evaluate(t1) * tau.evaluate(t2)


def test_right_and_two_statistics_add_under_insertion():
    # the additivity that makes the monomial weights multiplicative
    for n1 in range(1, 5):
        for n2 in range(1, 6 - n1):
            for t1 in iter_bpt(n1):
                for t2 in iter_bpt(n2):
                    for v in range(n1):
                        t = insert(t1, v, t2)
                        assert right_edges(t) == right_edges(t1) + right_edges(t2) + 1
                        assert two_child_count(t) == (
                            two_child_count(t1) + two_child_count(t2) + 1
                        )


def test_same_branch_weights_same_troupe():
    """Constructive direction of the branch-rule bijection."""
    reference = right_two_monomial(q, 1)
    table = {}
    for n in range(1, 8):
        for b in iter_branches(n):
            table[encode(b)] = reference.weight_of_branch(b)
    clone = from_table(table, name="clone")
    for n in range(1, 8):
        for t in iter_bpt(n):
            assert clone.evaluate(t) == reference.evaluate(t)


def test_indicator_support_closed_under_insertion():
    for tau in (full_trees(), motzkin_trees()):
        for n1 in range(1, 4):
            for n2 in range(1, 5 - n1):
                for t1 in iter_bpt(n1):
                    for t2 in iter_bpt(n2):
                        for v in range(n1):
                            t = insert(t1, v, t2)
                            inside = tau.evaluate(t1) == 1 and tau.evaluate(t2) == 1
                            assert (tau.evaluate(t) == 1) == inside


# -- weighted sums


def test_all_troupe_sums():
    tau = all_trees()
    for n in range(1, 7):
        assert weighted_sum_size(tau, "branch", n) == 2 ** (n - 1)
    import math

    for n in range(2, 7):
        assert weighted_sum(tau, "dbpt", (0,) * n) == math.factorial(n - 1)


def test_full_troupe_branch_sums():
    tau = full_trees()
    assert weighted_sum(tau, "branch", (0, 0)) == 1
    for n in range(3, 7):
        assert weighted_sum(tau, "branch", (0,) * n) == 0


def test_motzkin_troupe_bpt_sums():
    tau = motzkin_trees()
    for n in range(2, 8):
        assert weighted_sum(tau, "bpt", (0,) * n) == motzkin_number(n - 2)


def test_rightmono_sums():
    tau = right_two_monomial(q, 1)
    for n in range(1, 6):
        assert weighted_sum_size(tau, "branch", n) == q * (1 + q) ** (n - 1)


def test_word_length_one_sums_vanish():
    for tau in (all_trees(), right_two_monomial(q, 1)):
        assert weighted_sum(tau, "branch", (0,)) == 0
        assert weighted_sum(tau, "bpt", (0,)) == 0  # the empty tree weighs 0
        assert weighted_sum(tau, "dbpt", (0,)) == 0


def test_series_helpers():
    tau = all_trees()
    bs = branch_series(tau, 6)
    ts = tree_series(tau, 6)
    assert list(bs.coeffs) == [0, 1, 2, 4, 8, 16]
    assert list(ts.coeffs) == [0, 1, 2, 5, 14, 42]


def test_transform_matches_enumeration_for_random_weights():
    from troupes.series import troupe_transform

    for seed in (101, 202, 303):
        tau = from_table(random_branch_table(seed, max_size=7))
        assert troupe_transform(branch_series(tau, 8)) == tree_series(tau, 8)


# -- built-in lookup and the random table


def test_builtin_dispatch():
    assert builtin("all").name == "all"
    assert builtin("full").name == "full"
    assert builtin("motzkin").name == "motzkin"
    assert builtin("colorset:0,1").name == "colorset:[0, 1]"
    assert builtin("colorcount:1").name == "colorcount:[1]"
    tau = builtin("rightmono:q,1")
    assert tau.evaluate(next(iter_branches(2))) in (q, q * q)
    assert builtin("rightmono:2,1/3") is not None
    with pytest.raises(ValueError):
        builtin("nonsense")
    with pytest.raises(ValueError):
        builtin("rightmono:1")


def test_random_table_is_deterministic():
    a = random_branch_table(11, max_size=4, num_colors=2)
    b = random_branch_table(11, max_size=4, num_colors=2)
    assert a == b
    c = random_branch_table(12, max_size=4, num_colors=2)
    assert a != c


def test_random_table_covers_all_small_branches():
    table = random_branch_table(5, max_size=3, num_colors=2)
    for n in range(1, 4):
        for word in itertools.product((0, 1), repeat=n + 1):
            for br in iter_branch_word(word):
                assert encode(br) in table


def test_weight_of_branch_rejects_non_branch():
    tau = all_trees()
    t = next(t for t in iter_bpt(3) if two_child_count(t) > 0)
    with pytest.raises(ValueError):
        tau.weight_of_branch(t)
