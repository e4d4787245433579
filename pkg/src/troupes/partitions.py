"""Set partitions of [n], their classes, and descending runs of permutations.

Partitions are stored canonically: blocks sorted by minimum element, elements
ascending within a block.  Permutations are plain tuples of values 1..n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, n: int, blocks: Iterable[Iterable[int]]) -> SetPartition:
        """Normalize and validate a collection of blocks covering 1..n."""
        materialized = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in materialized):
            raise ValueError("blocks must be nonempty")
        canon = tuple(sorted(materialized, key=lambda b: b[0]))
        seen: set[int] = set()
        for b in canon:
            seen.update(b)
        if seen != set(range(1, n + 1)) or sum(len(b) for b in canon) != n:
            raise ValueError(f"blocks do not partition 1..{n}")
        return cls(n, canon)

    def block_of(self, i: int) -> tuple[int, ...]:
        for b in self.blocks:
            if i in b:
                return b
        raise KeyError(i)

    def __str__(self) -> str:
        inner = ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return "{" + inner + "}"


def parse_partition(text: str) -> SetPartition:
    """Parse the ``{{a,b},{c}}`` form produced by ``str``."""
    text = text.strip()
    if not (text.startswith("{{") and text.endswith("}}")):
        raise ValueError(f"bad partition syntax {text!r}")
    blocks = []
    for chunk in text[2:-2].split("},{"):
        blocks.append([int(x) for x in chunk.split(",") if x])
    n = sum(len(b) for b in blocks)
    return SetPartition.of(n, blocks)


class PartitionFlags(NamedTuple):
    interval: bool
    noncrossing: bool
    irreducible: bool


def is_interval(p: SetPartition) -> bool:
    """Every block is a contiguous range of integers."""
    return all(b[-1] - b[0] + 1 == len(b) for b in p.blocks)


def is_noncrossing(p: SetPartition) -> bool:
    """No i<j<k<l with i~k and j~l in different blocks.

    Checked via the arc diagram: connect consecutive elements of each block
    and look for crossing chords.
    """
    arcs = []
    for b in p.blocks:
        arcs.extend(zip(b, b[1:]))
    for (a1, b1), (a2, b2) in itertools.combinations(arcs, 2):
        if a1 > a2:
            (a1, b1), (a2, b2) = (a2, b2), (a1, b1)
        if a1 < a2 < b1 < b2:
            return False
    return True


def is_irreducible(p: SetPartition) -> bool:
    """Noncrossing with 1 and n in the same block.

    The singleton partition of [1] counts as irreducible (1 ~ 1 trivially).
    """
    return is_noncrossing(p) and p.block_of(1) == p.block_of(p.n)


def classify(p: SetPartition) -> PartitionFlags:
    nc = is_noncrossing(p)
    return PartitionFlags(is_interval(p), nc, nc and p.block_of(1) == p.block_of(p.n))


PARTITION_CLASSES = (
    "all",
    "interval",
    "noncrossing",
    "nc_irreducible",
    "nc_irreducible_min2",
)


def _accepts(klass: str, p: SetPartition) -> bool:
    if klass == "all":
        return True
    if klass == "interval":
        return is_interval(p)
    if klass == "noncrossing":
        return is_noncrossing(p)
    if klass == "nc_irreducible":
        return is_irreducible(p)
    if klass == "nc_irreducible_min2":
        return is_irreducible(p) and all(len(b) >= 2 for b in p.blocks)
    raise ValueError(f"unknown partition class {klass!r}")


def iter_partitions(n: int, klass: str = "all") -> Iterator[SetPartition]:
    """All partitions of 1..n in the given class, each exactly once.

    Deterministic order: element n is placed into each block of a partition
    of 1..n-1 in turn (existing blocks first, then alone), recursively.
    """
    if n < 1:
        raise ValueError("n must be positive")

    def rec(k: int) -> Iterator[list[list[int]]]:
        if k == 0:
            yield []
            return
        for blocks in rec(k - 1):
            for i in range(len(blocks)):
                blocks[i].append(k)
                yield blocks
                blocks[i].pop()
            blocks.append([k])
            yield blocks
            blocks.pop()

    for blocks in rec(n):
        p = SetPartition.of(n, [list(b) for b in blocks])
        if _accepts(klass, p):
            yield p


@lru_cache(maxsize=None)
def partitions_as_index_blocks(n: int, klass: str) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Cached partitions with 0-based blocks, for fast word indexing."""
    return tuple(
        tuple(tuple(i - 1 for i in b) for b in p.blocks)
        for p in iter_partitions(n, klass)
    )


# ---------------------------------------------------------------------------
# Permutations and descending runs


def iter_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(1, n + 1))


def descents(sigma: Sequence[int]) -> list[int]:
    return [i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i]]


def druns(sigma: Sequence[int]) -> SetPartition:
    """Partition of values into maximal consecutive decreasing runs."""
    n = len(sigma)
    if n == 0:
        raise ValueError("empty permutation")
    blocks: list[list[int]] = [[sigma[0]]]
    for i in range(1, n):
        if sigma[i - 1] > sigma[i]:
            blocks[-1].append(sigma[i])
        else:
            blocks.append([sigma[i]])
    return SetPartition.of(n, blocks)


def druns_in_order(sigma: Sequence[int]) -> list[tuple[int, ...]]:
    """Run value-sets in the order the runs occur in sigma."""
    blocks: list[list[int]] = [[sigma[0]]]
    for i in range(1, len(sigma)):
        if sigma[i - 1] > sigma[i]:
            blocks[-1].append(sigma[i])
        else:
            blocks.append([sigma[i]])
    return [tuple(sorted(b)) for b in blocks]


def iter_sigma_first_n(n: int) -> Iterator[tuple[int, ...]]:
    """Permutations of 1..n with first entry n, lexicographic in the rest."""
    for rest in itertools.permutations(range(1, n)):
        yield (n,) + rest


def iter_D(n: int) -> Iterator[tuple[int, ...]]:
    """Permutations with first entry n whose descending runs all have size >= 2."""
    for sigma in iter_sigma_first_n(n):
        if all(len(b) >= 2 for b in druns(sigma).blocks):
            yield sigma


@lru_cache(maxsize=None)
def first_n_druns_index_blocks(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """For each permutation with sigma(1)=n, its run blocks 0-based; cached."""
    return tuple(
        tuple(tuple(i - 1 for i in b) for b in druns(sigma).blocks)
        for sigma in iter_sigma_first_n(n)
    )
