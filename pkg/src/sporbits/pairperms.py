"""Pair permutations: the minimal-length conjugators carrying j_bar(n) to a
given fixed-point-free involution.

The defining property used here is the conjugation identity w^-1 o jbar o w =
iota (composition of one-line words as functions).  The orientation was fixed
by requiring the known value P(4321) = {1342, 3124}; a module self-test
asserts it on import.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from sporbits.involutions import FpfInvolution, j_bar, pair_statistics
from sporbits.permutations import Permutation, length

#: default cap on the word size searched by brute force (|S_8| = 40320)
DEFAULT_SEARCH_BOUND = 8


def conjugation_check(w: Permutation, iota: FpfInvolution) -> bool:
    """True when w^-1 o jbar o w equals iota."""
    if w.size != iota.size:
        raise ValueError("size mismatch")
    jb = j_bar(iota.size // 2).word
    winv = w.inverse().word
    return all(winv[jb[w.word[i] - 1] - 1] == iota.word[i] for i in range(w.size))


@dataclass(frozen=True)
class PairPermutationSet:
    """All minimal-length conjugators for one involution."""

    iota: FpfInvolution
    perms: tuple[Permutation, ...]
    common_length: int

    def to_json(self) -> dict:
        return {
            "iota": self.iota.to_json(),
            "pair_permutations": [p.to_json() for p in self.perms],
            "length": self.common_length,
        }


def pair_permutations(
    iota: FpfInvolution, bound: int = DEFAULT_SEARCH_BOUND
) -> PairPermutationSet:
    """Exhaustive minimal-length conjugator search over S_2n.

    The expected minimum c + 2r (from the arc statistics) prunes the scan, but
    the result is still the set of ALL minimal-length words passing the
    conjugation check, sorted by word.
    """
    size = iota.size
    if size > bound:
        raise ValueError(f"word size {size} exceeds the search bound {bound}")
    stats = pair_statistics(iota)
    target = stats.c + 2 * stats.r
    best_len: int | None = None
    best: list[Permutation] = []
    for word in itertools.permutations(range(1, size + 1)):
        w = Permutation(word)
        l = length(w)
        if l < target or (best_len is not None and l > best_len):
            continue
        if conjugation_check(w, iota):
            if best_len is None or l < best_len:
                best_len, best = l, [w]
            elif l == best_len:
                best.append(w)
    if best_len is None:
        raise RuntimeError(f"no conjugator found for {iota}")  # cannot happen
    best.sort(key=lambda p: p.word)
    return PairPermutationSet(iota, tuple(best), best_len)


def _self_test() -> None:
    got = {p.word for p in pair_permutations(FpfInvolution((4, 3, 2, 1))).perms}
    if got != {(1, 3, 4, 2), (3, 1, 2, 4)}:
        raise AssertionError(f"conjugation orientation broken: P(4321) = {got}")


_self_test()
