"""Moment/cumulant conversion over three partition lattices, plus bridges.

Moments and cumulants are dense tables over words in a finite color alphabet.
The three cumulant kinds differ only in which partitions of word positions
enter the defining expansion:

* classical -- all partitions,
* free      -- noncrossing partitions,
* boolean   -- interval partitions.

Conversion uses a single triangular recursion (moment of a word minus the
contributions of every non-maximal partition) rather than Mobius inversion,
so one code path serves all three lattices and stays easy to cross-check by
brute force.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .rings import RingElem, as_ring_elem, format_ring_elem, parse_ring_elem
from .partitions import (
    first_n_druns_index_blocks,
    partitions_as_index_blocks,
)
from .series import Series
from .troupe import WeightedTroupe, weighted_sum

Word = tuple[int, ...]

KIND_TO_CLASS = {
    "classical": "all",
    "free": "noncrossing",
    "boolean": "interval",
}


def iter_words(alphabet: Sequence[int], max_len: int) -> Iterator[Word]:
    """All words over the alphabet of lengths 1..max_len, shortest first."""
    for n in range(1, max_len + 1):
        for word in itertools.product(alphabet, repeat=n):
            yield word


def _restrict(word: Word, positions: Iterable[int]) -> Word:
    return tuple(word[i] for i in positions)


@dataclass(frozen=True)
class MomentFunctional:
    """Dense table of moments for words up to ``max_len``.

    The empty word implicitly has moment 1 (the functional is unital).
    """

    alphabet: tuple[int, ...]
    max_len: int
    table: Mapping[Word, RingElem]

    @classmethod
    def of(cls, alphabet: Sequence[int], max_len: int,
           table: Mapping[Word, RingElem]) -> MomentFunctional:
        alphabet = tuple(sorted(set(alphabet)))
        full = {}
        for word in iter_words(alphabet, max_len):
            if word not in table:
                raise KeyError(f"missing moment for word {word}")
            full[word] = as_ring_elem(table[word])
        return cls(alphabet, max_len, full)

    def moment(self, word: Word) -> RingElem:
        if len(word) == 0:
            return Fraction(1)
        return self.table[word]


@dataclass(frozen=True)
class CumulantTable:
    """Dense table of cumulants of one kind over the same word domain."""

    kind: str
    alphabet: tuple[int, ...]
    max_len: int
    table: Mapping[Word, RingElem]

    def cumulant(self, word: Word) -> RingElem:
        return self.table[word]

    def partition_product(self, word: Word, blocks: Iterable[Iterable[int]]) -> RingElem:
        """Product of cumulants over the blocks of a partition of positions."""
        out: RingElem = Fraction(1)
        for block in blocks:
            out = out * self.table[_restrict(word, block)]
        return out


def moments_to_cumulants(phi: MomentFunctional, kind: str) -> CumulantTable:
    """Triangular solve of the defining expansion for the requested kind."""
    klass = KIND_TO_CLASS[kind]
    table: dict[Word, RingElem] = {}
    for word in iter_words(phi.alphabet, phi.max_len):
        n = len(word)
        acc = phi.moment(word)
        for blocks in partitions_as_index_blocks(n, klass):
            if len(blocks) == 1:
                continue  # the one-block partition carries the unknown
            prod: RingElem = Fraction(1)
            for block in blocks:
                prod = prod * table[_restrict(word, block)]
            acc = acc - prod
        table[word] = acc
    return CumulantTable(kind, phi.alphabet, phi.max_len, table)


def cumulants_to_moments(c: CumulantTable) -> MomentFunctional:
    """Direct expansion: each moment is the partition sum of cumulant products."""
    klass = KIND_TO_CLASS[c.kind]
    table: dict[Word, RingElem] = {}
    for word in iter_words(c.alphabet, c.max_len):
        n = len(word)
        acc: RingElem = Fraction(0)
        for blocks in partitions_as_index_blocks(n, klass):
            acc = acc + c.partition_product(word, blocks)
        table[word] = acc
    return MomentFunctional(c.alphabet, c.max_len, table)


def boolean_to_free(b: CumulantTable) -> CumulantTable:
    """Bridge from Boolean to free cumulants through irreducible noncrossing
    partitions: the negated free cumulant of a word is the sum over such
    partitions of products of negated Boolean cumulants of the blocks."""
    if b.kind != "boolean":
        raise ValueError("input must be a boolean cumulant table")
    table: dict[Word, RingElem] = {}
    for word in iter_words(b.alphabet, b.max_len):
        n = len(word)
        acc: RingElem = Fraction(0)
        for blocks in partitions_as_index_blocks(n, "nc_irreducible"):
            prod: RingElem = Fraction(1)
            for block in blocks:
                prod = prod * (-b.table[_restrict(word, block)])
            acc = acc + prod
        table[word] = -acc
    return CumulantTable("free", b.alphabet, b.max_len, table)


def boolean_to_classical(b: CumulantTable) -> CumulantTable:
    """Bridge from Boolean to classical cumulants through permutations whose
    first entry is maximal, grouped by descending runs.

    The sum runs over all such permutations; terms with a singleton run
    vanish on their own whenever the length-1 Boolean cumulants are zero.
    """
    if b.kind != "boolean":
        raise ValueError("input must be a boolean cumulant table")
    table: dict[Word, RingElem] = {}
    for word in iter_words(b.alphabet, b.max_len):
        n = len(word)
        acc: RingElem = Fraction(0)
        for blocks in first_n_druns_index_blocks(n):
            prod: RingElem = Fraction(1)
            for block in blocks:
                prod = prod * (-b.table[_restrict(word, block)])
            acc = acc + prod
        table[word] = -acc
    return CumulantTable("classical", b.alphabet, b.max_len, table)


def classical_via_egf(moments: Sequence[RingElem]) -> list[RingElem]:
    """Univariate classical cumulants from the log of the moment EGF.

    ``moments`` is ``m_0..m_N`` with ``m_0 = 1``; returns ``K_1..K_N``.
    Works over either coefficient ring since only integer divisions occur.
    """
    moments = [as_ring_elem(m) for m in moments]
    if not moments or moments[0] != 1:
        raise ValueError("moment sequence must start with m_0 = 1")
    fact = [1]
    for k in range(1, len(moments)):
        fact.append(fact[-1] * k)
    egf = Series([m * Fraction(1, fact[n]) for n, m in enumerate(moments)])
    log = egf.log()
    return [log.coeffs[n] * fact[n] for n in range(1, len(moments))]


# ---------------------------------------------------------------------------
# Serialization (one line per word)


def format_table(table: Mapping[Word, RingElem]) -> str:
    lines = []
    for word in sorted(table, key=lambda w: (len(w), w)):
        cols = ",".join(map(str, word))
        lines.append(f"word {cols} = {format_ring_elem(table[word])}")
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> dict[Word, RingElem]:
    """Parse ``word i1,...,ik = value`` lines; raises with the line number."""
    table: dict[Word, RingElem] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            if not line.startswith("word "):
                raise ValueError("expected a 'word ... = ...' line")
            body = line[len("word "):]
            word_text, sep, value_text = body.partition("=")
            if not sep:
                raise ValueError("missing '='")
            word = tuple(int(x) for x in word_text.strip().split(","))
            table[word] = parse_ring_elem(value_text)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    return table


def moment_functional_from_text(text: str) -> MomentFunctional:
    table = parse_table(text)
    if not table:
        raise ValueError("empty moment table")
    alphabet = sorted({c for w in table for c in w})
    max_len = max(len(w) for w in table)
    return MomentFunctional.of(alphabet, max_len, table)


# ---------------------------------------------------------------------------
# Tree-enumeration characterization of the three cumulant kinds


@dataclass(frozen=True)
class ConditionCheck:
    """One cumulant kind's comparison for one word.

    ``enumeration`` is the negated weighted tree sum, ``from_moments`` the
    cumulant recomputed from the synthesized moments, and ``bridge`` the
    value obtained through the Boolean-cumulant bridge (None for the boolean
    condition itself, which has no bridge).
    """

    kind: str
    enumeration: RingElem
    from_moments: RingElem
    bridge: RingElem | None

    @property
    def equal(self) -> bool:
        routes = [self.from_moments]
        if self.bridge is not None:
            routes.append(self.bridge)
        return all(r == self.enumeration for r in routes)


@dataclass(frozen=True)
class EquivalenceReport:
    word: Word
    checks: tuple[ConditionCheck, ...]

    @property
    def all_equal(self) -> bool:
        return all(c.equal for c in self.checks)


def equivalence_reports(tau: WeightedTroupe, alphabet: Sequence[int],
                        max_len: int) -> list[EquivalenceReport]:
    """Check the tree-enumeration characterization on every word up to
    ``max_len``.

    The moment functional is synthesized so that the Boolean condition holds
    by construction (Boolean cumulants are negated branch sums); the other
    conditions are then compared against the decreasing-tree and plain-tree
    enumerations, and against the two bridge formulas.
    """
    alphabet = tuple(sorted(set(alphabet)))
    boolean_table: dict[Word, RingElem] = {}
    for word in iter_words(alphabet, max_len):
        boolean_table[word] = -weighted_sum(tau, "branch", word)
    boolean = CumulantTable("boolean", alphabet, max_len, boolean_table)
    phi = cumulants_to_moments(boolean)
    classical = moments_to_cumulants(phi, "classical")
    free = moments_to_cumulants(phi, "free")
    boolean_back = moments_to_cumulants(phi, "boolean")
    free_bridge = boolean_to_free(boolean)
    classical_bridge = boolean_to_classical(boolean)

    reports = []
    for word in iter_words(alphabet, max_len):
        checks = (
            ConditionCheck(
                "classical",
                -weighted_sum(tau, "dbpt", word),
                classical.table[word],
                classical_bridge.table[word],
            ),
            ConditionCheck(
                "free",
                -weighted_sum(tau, "bpt", word),
                free.table[word],
                free_bridge.table[word],
            ),
            ConditionCheck(
                "boolean",
                -weighted_sum(tau, "branch", word),
                boolean_back.table[word],
                None,
            ),
        )
        reports.append(EquivalenceReport(word, checks))
    return reports


def equivalence_report(tau: WeightedTroupe, word: Sequence[int]) -> EquivalenceReport:
    """Single-word convenience wrapper around :func:`equivalence_reports`."""
    word = tuple(word)
    reports = equivalence_reports(tau, sorted(set(word)), len(word))
    for r in reports:
        if r.word == word:
            return r
    raise AssertionError("word not covered")
