"""Insertion factors read directly off a permutation's plot.

A peak of a word is an interior position whose value exceeds both neighbors.
The points weakly southeast of a peak (position >= peak position, value <=
peak value) and not weakly southeast of any later peak form one region per
peak; together with the leftover region they partition the plot, and each
region spells out one insertion factor of the decreasing tree obtained by
inverting the inorder bijection.  Colors stay out of the picture: everything
here lives over a single color.
"""

from __future__ import annotations

from typing import Sequence

from .trees import (
    ColoredTree,
    LabeledTree,
    Node,
    alpha_inverse,
    inorder,
    labeled_insertion_factors,
)


def peaks(word: Sequence[int]) -> list[int]:
    """All 1-based positions p with word[p-1] < word[p] > word[p+1]."""
    if len(word) == 0:
        raise ValueError("empty word")
    if len(set(word)) != len(word):
        raise ValueError("word entries must be distinct")
    return [
        p
        for p in range(2, len(word))
        if word[p - 2] < word[p - 1] > word[p]
    ]


def _regions(word: Sequence[int]) -> list[list[tuple[int, int]]]:
    """Points (position, value) of each region: leftover first, then one
    region per peak in peak order.  Points come out sorted by position."""
    ps = peaks(word)
    regions: list[list[tuple[int, int]]] = [[] for _ in range(len(ps) + 1)]
    for i, value in enumerate(word, start=1):
        owner = 0
        for j in range(len(ps), 0, -1):
            p = ps[j - 1]
            if i >= p and value <= word[p - 1]:
                owner = j
                break
        regions[owner].append((i, value))
    return regions


def southeast_decomposition(word: Sequence[int]) -> list[tuple[int, ...]]:
    """The normalized words of the regions, leftover region first.

    Normalization replaces values by their ranks within the region (points
    are already in position order), so each region reads as a permutation of
    1..k.
    """
    out = []
    for region in _regions(word):
        values = [v for _, v in region]
        ranks = {v: r for r, v in enumerate(sorted(values), start=1)}
        out.append(tuple(ranks[v] for v in values))
    return out


def branch_from_inorder(values: Sequence[int]) -> LabeledTree:
    """The unique decreasing labeled branch whose inorder reading is ``values``.

    Vertices descend from the root in decreasing label order; each child
    hangs left when it precedes its parent in the word, right otherwise.
    Raises if the word is not the inorder reading of any branch.
    """
    if len(values) == 0:
        raise ValueError("empty branch word")
    pos = {v: i for i, v in enumerate(values)}
    desc = sorted(values, reverse=True)
    nodes: list[Node] = []
    labels: list[int] = []
    below: int | None = None
    for label in reversed(desc):  # build bottom-up so ids match branch ids
        if below is None:
            nodes.append(Node(0))
        else:
            child_label = labels[below]
            if pos[child_label] < pos[label]:
                nodes.append(Node(0, below, None))
            else:
                nodes.append(Node(0, None, below))
        labels.append(label)
        below = len(nodes) - 1
    lt = LabeledTree(
        ColoredTree(tuple(nodes), below, 0),
        tuple(labels),
    )
    if tuple(lt.labels[v] for v in inorder(lt.tree)) != tuple(values):
        raise ValueError(f"{values!r} is not the inorder word of a branch")
    return lt


def factors_from_plot(word: Sequence[int]) -> list[LabeledTree]:
    """Labeled insertion factors of the decreasing tree of a permutation,
    extracted from the plot alone.

    The leftover region is one factor as it stands; every peak region drops
    its first point (the peak, which is the region's maximum and belongs to
    the factor's governing vertex) and the rest spells the factor's inorder.
    Labels are the original values, matching the restriction labeling of the
    factors of ``alpha_inverse(word)``.
    """
    n = len(word)
    if sorted(word) != list(range(1, n + 1)):
        raise ValueError("expected a permutation of 1..n")
    regions = _regions(word)
    factors = [branch_from_inorder([v for _, v in regions[0]])]
    for region in regions[1:]:
        values = [v for _, v in region]
        if len(values) < 2 or values[0] != max(values):
            raise AssertionError("peak region must lead with its maximum")
        factors.append(branch_from_inorder(values[1:]))
    return factors


def tree_factors_for_comparison(word: Sequence[int]) -> list[LabeledTree]:
    """The oracle side: labeled insertion factors via the tree route."""
    return labeled_insertion_factors(alpha_inverse(word))
