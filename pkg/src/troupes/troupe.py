"""Weighted troupes: multiplicative tree weights determined by branch values.

A weighted troupe assigns every nonempty colored tree a ring value so that
inserting one tree into another multiplies their values, and the empty tree
maps to 0.  Such a weighting is pinned down by its values on branches, so a
troupe here is simply a branch-weight rule; evaluation on a general tree
multiplies the rule over the tree's insertion factors.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .rings import RingElem, as_ring_elem, q
from .series import Series
from .trees import (
    ColoredTree,
    encode,
    insertion_factors,
    is_branch,
    iter_bpt,
    iter_branch_word,
    iter_branches,
    iter_bpt_word,
    iter_dbpt,
    iter_dbpt_word,
    right_edges,
)


class WeightedTroupe:
    """A branch-weight rule extended multiplicatively to all trees.

    ``branch_weight`` must be total on branches; it is only ever called on
    branches.  Evaluations are memoized by canonical tree encoding.
    """

    def __init__(self, name: str, branch_weight: Callable[[ColoredTree], RingElem]):
        self.name = name
        self.branch_weight = branch_weight
        self._cache: dict[str, RingElem] = {}

    def __repr__(self):
        return f"WeightedTroupe({self.name!r})"

    def weight_of_branch(self, branch: ColoredTree) -> RingElem:
        if not is_branch(branch):
            raise ValueError("branch weights are defined on branches only")
        key = encode(branch)
        if key not in self._cache:
            self._cache[key] = as_ring_elem(self.branch_weight(branch))
        return self._cache[key]

    def evaluate(self, t: ColoredTree) -> RingElem:
        """0 on the empty tree, else the product of branch weights over the
        insertion factors."""
        if t.size == 0:
            return Fraction(0)
        key = encode(t)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        if is_branch(t):
            value = as_ring_elem(self.branch_weight(t))
        else:
            value = Fraction(1)
            for factor in insertion_factors(t):
                value = value * self.weight_of_branch(factor)
        self._cache[key] = value
        return value


# ---------------------------------------------------------------------------
# Built-in families


def all_trees() -> WeightedTroupe:
    """Weight 1 on every branch: the indicator of all nonempty trees."""
    return WeightedTroupe("all", lambda b: Fraction(1))


def full_trees() -> WeightedTroupe:
    """Indicator of full trees (no vertex with exactly one child); the
    branches of that family are the single-vertex ones."""
    return WeightedTroupe("full", lambda b: Fraction(1 if b.size == 1 else 0))


def motzkin_trees() -> WeightedTroupe:
    """Indicator of trees where a right child implies a left child; its
    branches are those with no right edges."""
    return WeightedTroupe("motzkin", lambda b: Fraction(1 if right_edges(b) == 0 else 0))


def color_constrained(allowed: Iterable[int]) -> WeightedTroupe:
    """Indicator of trees whose left-child-bearing vertices and box all carry
    a color from ``allowed``."""
    colors = frozenset(allowed)

    def weight(b: ColoredTree) -> RingElem:
        if b.box_color not in colors:
            return Fraction(0)
        for nd in b.nodes:
            if nd.left is not None and nd.color not in colors:
                return Fraction(0)
        return Fraction(1)

    return WeightedTroupe(f"colorset:{sorted(colors)}", weight)


def right_two_monomial(t1: RingElem, t2: RingElem) -> WeightedTroupe:
    """Weight ``t1^(right(T)+1) * t2^(two(T)+1)``; branches have two(T)=0."""
    t1 = as_ring_elem(t1)
    t2 = as_ring_elem(t2)

    def weight(b: ColoredTree) -> RingElem:
        return _power(t1, right_edges(b) + 1) * t2

    return WeightedTroupe("rightmono", weight)


def color_count(counted: Iterable[int], t: RingElem = q) -> WeightedTroupe:
    """Weight ``t^k`` where k counts vertices (and the box) colored from
    ``counted``, over the all-trees troupe."""
    colors = frozenset(counted)
    t = as_ring_elem(t)

    def weight(b: ColoredTree) -> RingElem:
        k = sum(1 for nd in b.nodes if nd.color in colors)
        if b.box_color in colors:
            k += 1
        return _power(t, k)

    return WeightedTroupe(f"colorcount:{sorted(colors)}", weight)


def _power(x: RingElem, k: int) -> RingElem:
    out: RingElem = Fraction(1)
    for _ in range(k):
        out = out * x
    return out


def from_table(table: Mapping[str, RingElem], default: RingElem = Fraction(0),
               name: str = "table") -> WeightedTroupe:
    """Branch weights looked up by canonical encoding, with a default."""
    frozen = {k: as_ring_elem(v) for k, v in table.items()}
    default = as_ring_elem(default)
    return WeightedTroupe(name, lambda b: frozen.get(encode(b), default))


def random_branch_table(seed: int, max_size: int, num_colors: int = 1,
                        denominator_bound: int = 4,
                        numerator_bound: int = 5) -> dict[str, RingElem]:
    """Deterministic random rational weights for every colored branch up to
    ``max_size``; useful with :func:`from_table`."""
    rng = random.Random(seed)
    table: dict[str, RingElem] = {}
    for size in range(1, max_size + 1):
        for word in itertools.product(range(num_colors), repeat=size + 1):
            for b in iter_branch_word(word):
                table[encode(b)] = Fraction(
                    rng.randint(-numerator_bound, numerator_bound),
                    rng.randint(1, denominator_bound),
                )
    return table


def builtin(spec: str) -> WeightedTroupe:
    """Resolve a CLI troupe name.

    Accepted: ``all``, ``full``, ``motzkin``, ``colorset:J``,
    ``rightmono:t1,t2`` and ``colorcount:J`` where J is a comma-separated
    color list and t1,t2 are rationals or the literal ``q``.
    """
    head, _, arg = spec.partition(":")
    if head == "all":
        return all_trees()
    if head == "full":
        return full_trees()
    if head == "motzkin":
        return motzkin_trees()
    if head == "colorset":
        return color_constrained(_parse_colors(arg))
    if head == "colorcount":
        return color_count(_parse_colors(arg))
    if head == "rightmono":
        parts = arg.split(",")
        if len(parts) != 2:
            raise ValueError("rightmono needs two parameters, e.g. rightmono:q,1")
        return right_two_monomial(_parse_param(parts[0]), _parse_param(parts[1]))
    raise ValueError(f"unknown troupe {spec!r}")


def _parse_colors(arg: str) -> list[int]:
    if not arg:
        raise ValueError("expected a comma-separated color list")
    return [int(x) for x in arg.split(",")]


def _parse_param(text: str) -> RingElem:
    text = text.strip()
    if text == "q":
        return q
    return Fraction(text)


# ---------------------------------------------------------------------------
# Weighted sums over the enumerated families


def weighted_sum(tau: WeightedTroupe, kind: str, word: Sequence[int]) -> RingElem:
    """Exact sum of the troupe over the colored family of the given word."""
    kind = kind.lower()
    if kind == "branch":
        family = iter_branch_word(word)
    elif kind == "bpt":
        family = iter_bpt_word(word)
    elif kind == "dbpt":
        family = (lt.tree for lt in iter_dbpt_word(word))
    else:
        raise ValueError(f"unknown family {kind!r}")
    total: RingElem = Fraction(0)
    for t in family:
        total = total + tau.evaluate(t)
    return total


def weighted_sum_size(tau: WeightedTroupe, kind: str, n: int) -> RingElem:
    """Exact sum over the single-color family of size n."""
    kind = kind.lower()
    if kind == "branch":
        family = iter_branches(n)
    elif kind == "bpt":
        family = iter_bpt(n)
    elif kind == "dbpt":
        family = (lt.tree for lt in iter_dbpt(n))
    else:
        raise ValueError(f"unknown family {kind!r}")
    total: RingElem = Fraction(0)
    for t in family:
        total = total + tau.evaluate(t)
    return total


def branch_series(tau: WeightedTroupe, order: int) -> Series:
    """Generating function of branch sums: coefficient n is the size-n sum."""
    coeffs: list[RingElem] = [Fraction(0)]
    for n in range(1, order):
        coeffs.append(weighted_sum_size(tau, "branch", n))
    return Series(coeffs)


def tree_series(tau: WeightedTroupe, order: int) -> Series:
    """Generating function of tree sums, by direct enumeration."""
    coeffs: list[RingElem] = [Fraction(0)]
    for n in range(1, order):
        coeffs.append(weighted_sum_size(tau, "bpt", n))
    return Series(coeffs)
