"""Permutations in one-line notation with the Schubert-combinatorics toolkit:
rank matrices, Rothe diagrams, essential boxes, inversion length and Bruhat
order.

All words are 1-based: the permutation 2143 sends 1 to 2, 2 to 1, etc.

A note on the Bruhat comparison direction: the covering relation ("q covers p
when q = p*t_ij and the length goes up by one") is the ground truth here.  The
rank-matrix comparator agrees with its transitive closure in the direction

    p <= q   iff   rank_matrix(p) >= rank_matrix(q) entrywise,

i.e. the identity permutation has the entrywise-largest rank matrix and is the
Bruhat minimum.  The direction was fixed by an exhaustive check against the
covering relation on S_4 (see tests), not taken from prose.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..N}, stored as its one-line word."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.word)
        if sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.word}")

    @staticmethod
    def from_any(value) -> "Permutation":
        """Coerce a word (iterable of ints, digit string, or Permutation)."""
        if isinstance(value, Permutation):
            return value
        if isinstance(value, str):
            return Permutation(tuple(int(ch) for ch in value.strip()))
        return Permutation(tuple(int(v) for v in value))

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Image of i (1-based)."""
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.word)
        for i, v in enumerate(self.word):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """Function composition self o other: i -> self(other(i))."""
        if len(self.word) != len(other.word):
            raise ValueError("size mismatch")
        return Permutation(tuple(self.word[v - 1] for v in other.word))

    def transpose_values(self, i: int, j: int) -> "Permutation":
        """Right multiply by t_ij (swap the entries in positions i and j)."""
        w = list(self.word)
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
        return Permutation(tuple(w))

    def to_json(self) -> list[int]:
        return list(self.word)

    def __str__(self) -> str:
        if self.size <= 9:
            return "".join(str(v) for v in self.word)
        return ",".join(str(v) for v in self.word)


@lru_cache(maxsize=None)
def _rank_matrix(word: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    n = len(word)
    rows = []
    prev = [0] * n
    for i in range(n):
        row = list(prev)
        for j in range(word[i] - 1, n):
            row[j] += 1
        rows.append(tuple(row))
        prev = row
    return tuple(rows)


def rank_matrix(p: Permutation) -> tuple[tuple[int, ...], ...]:
    """The rank matrix: entry (i,j) counts k <= i with p(k) <= j."""
    return _rank_matrix(p.word)


def length(p: Permutation) -> int:
    """Inversion count (Coxeter length)."""
    w = p.word
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def rothe_diagram(p: Permutation) -> frozenset[tuple[int, int]]:
    """Cells (i,j), 1-based, with j < p(i) and p^-1(j) > i."""
    inv = p.inverse().word
    return frozenset(
        (i, j)
        for i in range(1, p.size + 1)
        for j in range(1, p.word[i - 1])
        if inv[j - 1] > i
    )


def essential_boxes(p: Permutation) -> frozenset[tuple[int, int, int]]:
    """SE-maximal Rothe cells, each with its rank-matrix value."""
    cells = rothe_diagram(p)
    rm = rank_matrix(p)
    return frozenset(
        (i, j, rm[i - 1][j - 1])
        for (i, j) in cells
        if (i + 1, j) not in cells and (i, j + 1) not in cells
    )


def bruhat_leq(p: Permutation, q: Permutation) -> bool:
    """p <= q in (strong) Bruhat order; identity is the minimum.

    Computed by the entrywise rank-matrix criterion (direction validated
    against the covering relation on S_4).
    """
    if p.size != q.size:
        raise ValueError("size mismatch")
    rp, rq = rank_matrix(p), rank_matrix(q)
    return all(rp[i][j] >= rq[i][j] for i in range(p.size) for j in range(p.size))


def bruhat_covers(p: Permutation, q: Permutation) -> bool:
    """True when q covers p: q = p * t_ij with length(q) = length(p) + 1."""
    if p.size != q.size:
        raise ValueError("size mismatch")
    diff = [k for k in range(p.size) if p.word[k] != q.word[k]]
    if len(diff) != 2:
        return False
    i, j = diff
    if p.word[i] != q.word[j] or p.word[j] != q.word[i]:
        return False
    return length(q) == length(p) + 1


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic word order."""
    for w in itertools.permutations(range(1, n + 1)):
        yield Permutation(w)
