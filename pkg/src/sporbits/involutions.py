"""Fixed-point-free involutions as wiring diagrams.

Covers the poset side of the story: direct sums, crossing/nesting statistics
and the length formula n + 2c + 4r, the opposite-Bruhat order with covers and
greatest lower bounds, symplectic diagrams and essential boxes, the basic
families (single even box / even-odd box pair), and the decomposition of an
arbitrary involution into basic elements whose meet recovers it.

Convention: in the opposite Bruhat order longer words sit LOWER, so the
minimal-length involution j_bar(n) = 2143...(2n)(2n-1) is the unique top
element.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from sporbits.permutations import (
    Permutation,
    bruhat_leq,
    essential_boxes,
    length,
    rank_matrix,
    rothe_diagram,
)

#: default cap on the half-size accepted by enumerate_fpf (2n = 10, 945 elements)
DEFAULT_ENUM_BOUND = 5


@dataclass(frozen=True)
class FpfInvolution:
    """A fixed-point-free involution of {1..2n}, stored as its one-line word."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        w = self.word
        if len(w) % 2 != 0:
            raise ValueError("fixed-point-free involutions need even size")
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation word: {w}")
        for i, v in enumerate(w, start=1):
            if v == i:
                raise ValueError(f"fixed point at {i} in {w}")
            if w[v - 1] != i:
                raise ValueError(f"not an involution: {w}")

    @staticmethod
    def from_any(value) -> "FpfInvolution":
        if isinstance(value, FpfInvolution):
            return value
        if isinstance(value, Permutation):
            return FpfInvolution(value.word)
        if isinstance(value, str):
            parts = value.split(",") if "," in value else list(value.strip())
            return FpfInvolution(tuple(int(p) for p in parts))
        return FpfInvolution(tuple(int(v) for v in value))

    @staticmethod
    def from_arcs(arcs: Iterable[tuple[int, int]]) -> "FpfInvolution":
        pairs = [tuple(sorted(a)) for a in arcs]
        word = [0] * (2 * len(pairs))
        for a, b in pairs:
            word[a - 1], word[b - 1] = b, a
        return FpfInvolution(tuple(word))

    @property
    def n(self) -> int:
        """Half-size: the number of arcs."""
        return len(self.word) // 2

    @property
    def size(self) -> int:
        return len(self.word)

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """The n arcs {i, iota(i)} with i < iota(i), sorted by left endpoint."""
        return tuple(
            (i, v) for i, v in enumerate(self.word, start=1) if i < v
        )

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def permutation(self) -> Permutation:
        return Permutation(self.word)

    def to_json(self) -> list[int]:
        return list(self.word)

    def __str__(self) -> str:
        if self.size <= 9:
            return "".join(str(v) for v in self.word)
        return ",".join(str(v) for v in self.word)


@dataclass(frozen=True)
class PairStatistics:
    """Counts of arc-pair patterns: c crossings, r nestings, d disjoint."""

    c: int
    r: int
    d: int


def j_bar(n: int) -> FpfInvolution:
    """The minimal-length involution 2143...(2n)(2n-1): n side-by-side arcs."""
    if n < 1:
        raise ValueError("n must be positive")
    word = []
    for k in range(1, n + 1):
        word.extend((2 * k, 2 * k - 1))
    return FpfInvolution(tuple(word))


def direct_sum(a: FpfInvolution, b: FpfInvolution, *rest: FpfInvolution) -> FpfInvolution:
    """Place wiring diagrams side by side (b shifted past a, and so on)."""
    word = list(a.word)
    for nxt in (b, *rest):
        shift = len(word)
        word.extend(v + shift for v in nxt.word)
    return FpfInvolution(tuple(word))


def pair_statistics(iota: FpfInvolution) -> PairStatistics:
    """Classify every pair of arcs as crossing, nesting, or disjoint.

    With arcs {a<b} and {x<y}, a<x: crossing means a<x<b<y (an embedded 3412
    pattern), nesting means a<x<y<b (embedded 4321), otherwise the arcs are
    disjoint.  Crossings count the countryside involutions contained in iota
    and nestings the rainbow ones.
    """
    arcs = iota.arcs
    c = r = d = 0
    for (a, b), (x, y) in itertools.combinations(arcs, 2):
        if x < b < y:
            c += 1
        elif y < b:
            r += 1
        else:
            d += 1
    return PairStatistics(c, r, d)


def fpf_length(iota: FpfInvolution) -> int:
    """Length via the wiring-diagram formula n + 2c + 4r."""
    stats = pair_statistics(iota)
    return iota.n + 2 * stats.c + 4 * stats.r


def conjugate_by_transposition(iota: FpfInvolution, i: int, j: int) -> FpfInvolution:
    """Switch the plugs in outlets i and j: t_ij * iota * t_ij."""
    w = list(iota.word)
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    for k, v in enumerate(w):
        if v == i:
            w[k] = j
        elif v == j:
            w[k] = i
    return FpfInvolution(tuple(w))


def covers(iota: FpfInvolution, kappa: FpfInvolution) -> bool:
    """True when kappa covers iota in the opposite Bruhat order.

    kappa must arise from iota by one outlet switch and be shorter by exactly
    two (longer word = lower element).
    """
    if iota.size != kappa.size:
        raise ValueError("size mismatch")
    return kappa in _switch_neighbors(iota, -2)


def lower_covers(iota: FpfInvolution) -> frozenset[FpfInvolution]:
    """All elements covered by iota (one switch, two units longer)."""
    return _switch_neighbors(iota, +2)


def upper_covers(iota: FpfInvolution) -> frozenset[FpfInvolution]:
    """All elements covering iota (one switch, two units shorter)."""
    return _switch_neighbors(iota, -2)


def _switch_neighbors(iota: FpfInvolution, delta: int) -> frozenset[FpfInvolution]:
    base = length(iota.permutation())
    out = set()
    for i, j in itertools.combinations(range(1, iota.size + 1), 2):
        if iota(i) == j:
            continue  # switching a wire's own endpoints is a no-op
        other = conjugate_by_transposition(iota, i, j)
        if length(other.permutation()) == base + delta:
            out.add(other)
    return frozenset(out)


def enumerate_fpf(n: int, bound: int = DEFAULT_ENUM_BOUND) -> list[FpfInvolution]:
    """All (2n-1)!! fixed-point-free involutions of {1..2n}, deterministically.

    Ordered by pairing the smallest free outlet with each larger free outlet
    in increasing order.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise ValueError(f"n={n} exceeds the enumeration bound {bound}")
    return [FpfInvolution.from_arcs(arcs) for arcs in _matchings(tuple(range(1, 2 * n + 1)))]


def _matchings(free: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not free:
        yield ()
        return
    first, rest = free[0], free[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1 :]
        for tail in _matchings(remaining):
            yield ((first, partner),) + tail


def opposite_leq(iota: FpfInvolution, kappa: FpfInvolution) -> bool:
    """iota <= kappa in the opposite Bruhat order (longer word = lower)."""
    return bruhat_leq(kappa.permutation(), iota.permutation())


class NoUniqueMeet(ValueError):
    """Raised when a set of involutions has no unique greatest lower bound."""

    def __init__(self, antichain: Sequence[FpfInvolution]):
        self.antichain = tuple(antichain)
        words = ", ".join(str(k) for k in self.antichain)
        super().__init__(f"no unique meet; maximal common lower bounds: {words}")


def glb(
    elements: Iterable[FpfInvolution],
    n: int | None = None,
    bound: int = DEFAULT_ENUM_BOUND,
) -> FpfInvolution:
    """Greatest lower bound in the opposite Bruhat order, by poset search.

    glb of the empty set is the top element j_bar(n) (n must then be given).
    Raises NoUniqueMeet with the offending antichain if the maximal common
    lower bounds are not unique.
    """
    elems = list(elements)
    if not elems:
        if n is None:
            raise ValueError("glb of empty set needs an explicit half-size n")
        return j_bar(n)
    half = elems[0].n
    if any(e.n != half for e in elems):
        raise ValueError("size mismatch")
    lower = [
        k for k in enumerate_fpf(half, bound) if all(opposite_leq(k, e) for e in elems)
    ]
    maximal = [
        k for k in lower if not any(k != m and opposite_leq(k, m) for m in lower)
    ]
    if len(maximal) != 1:
        raise NoUniqueMeet(maximal)
    return maximal[0]


# ---------------------------------------------------------------------------
# symplectic diagrams, essential boxes, and the basic families


def symplectic_diagram(iota: FpfInvolution) -> frozenset[tuple[int, int]]:
    """Rothe diagram of the word intersected with the strict upper triangle."""
    return frozenset((i, j) for (i, j) in rothe_diagram(iota.permutation()) if j > i)


def symplectic_essential_boxes(iota: FpfInvolution) -> frozenset[tuple[int, int, int]]:
    """Symplectic diagram cells with no diagram cell immediately south or east,
    each carrying its rank-matrix value."""
    cells = symplectic_diagram(iota)
    rm = rank_matrix(iota.permutation())
    return frozenset(
        (i, j, rm[i - 1][j - 1])
        for (i, j) in cells
        if (i + 1, j) not in cells and (i, j + 1) not in cells
    )


def odd_rank_constraint_holds(iota: FpfInvolution) -> bool:
    """Every symplectic-diagram box (i,j) with odd rank 2k+1 forces the rank
    at (i-1,i) to be at most 2k.  Holds for every valid involution; exposed as
    a test oracle."""
    rm = rank_matrix(iota.permutation())
    for (i, j) in symplectic_diagram(iota):
        r = rm[i - 1][j - 1]
        if r % 2 == 1 and rm[i - 2][i - 1] > r - 1:
            return False
    return True


def is_a_even(iota: FpfInvolution) -> bool:
    """Exactly one symplectic essential box, with an even rank condition."""
    boxes = symplectic_essential_boxes(iota)
    if len(boxes) != 1:
        return False
    (_, _, r), = boxes
    return r % 2 == 0


def is_a_odd(iota: FpfInvolution) -> bool:
    """Exactly two boxes: one at (p,p+1) with even rank 2r and one in row p+1
    with odd rank 2r+1."""
    boxes = sorted(symplectic_essential_boxes(iota))
    if len(boxes) != 2:
        return False
    (p, q, even), (i, _, odd) = boxes
    return (
        q == p + 1
        and i == p + 1
        and even % 2 == 0
        and odd == even + 1
    )


def in_basic_family(iota: FpfInvolution) -> bool:
    """Membership in the candidate basic set (even or odd family)."""
    return is_a_even(iota) or is_a_odd(iota)


class InfeasibleBox(ValueError):
    """No fixed-point-free involution realizes the requested essential set."""


def _unique_with_boxes(
    n: int, target: frozenset[tuple[int, int, int]], bound: int
) -> FpfInvolution:
    matches = [
        k for k in enumerate_fpf(n, bound) if symplectic_essential_boxes(k) == target
    ]
    if not matches:
        raise InfeasibleBox(f"no involution of size {2*n} has essential set {sorted(target)}")
    if len(matches) > 1:
        words = ", ".join(str(m) for m in matches)
        raise InfeasibleBox(f"ambiguous essential set {sorted(target)}: {words}")
    return matches[0]


def construct_a_even(
    n: int, i: int, j: int, rank: int, bound: int = DEFAULT_ENUM_BOUND
) -> FpfInvolution:
    """The involution of size 2n whose symplectic essential set is exactly
    {(i, j, rank)} with rank even.

    Found by exhaustive search over the enumeration (the postcondition is the
    contract); raises InfeasibleBox when no or several involutions match.
    """
    if not (1 <= i < j <= 2 * n):
        raise InfeasibleBox(f"box ({i},{j}) is not strictly upper-triangular for size {2*n}")
    if rank % 2 != 0:
        raise InfeasibleBox("even family needs an even rank condition")
    return _unique_with_boxes(n, frozenset({(i, j, rank)}), bound)


def construct_a_odd(
    n: int, i: int, j: int, rank: int, bound: int = DEFAULT_ENUM_BOUND
) -> FpfInvolution:
    """The involution of size 2n with exactly the boxes (i-1, i, rank-1) and
    (i, j, rank), rank odd.

    An odd rank condition on the superdiagonal (j = i + 1 ... with i = p+1,
    meaning a lone odd box next to the diagonal) is infeasible and reported.
    """
    if rank % 2 != 1:
        raise InfeasibleBox("odd family needs an odd rank condition")
    if i < 2 or not (i < j <= 2 * n):
        raise InfeasibleBox(f"box ({i},{j}) infeasible for the odd family at size {2*n}")
    if j == i + 1:
        raise InfeasibleBox("an odd rank condition on the superdiagonal is forbidden")
    target = frozenset({(i - 1, i, rank - 1), (i, j, rank)})
    return _unique_with_boxes(n, target, bound)


def basics_decomposition(
    iota: FpfInvolution, bound: int = DEFAULT_ENUM_BOUND
) -> frozenset[FpfInvolution]:
    """The basic elements attached to iota's symplectic essential boxes.

    Even boxes contribute the single-box element with the same rank condition;
    an odd box at (i,j) with rank r contributes the two-box element with
    (i-1, i, r-1) and (i, j, r).  The greatest lower bound of the result is
    iota itself; for j_bar(n) the result is empty.
    """
    out = set()
    for (i, j, r) in symplectic_essential_boxes(iota):
        if r % 2 == 0:
            out.add(construct_a_even(iota.n, i, j, r, bound))
        else:
            out.add(construct_a_odd(iota.n, i, j, r, bound))
    return frozenset(out)


# ---------------------------------------------------------------------------
# poset plumbing: Hasse diagram and DOT export


@lru_cache(maxsize=None)
def hasse_diagram(n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Edges (lower word, upper word) of the opposite-Bruhat Hasse diagram.

    Materialized only for small sizes; cached per size so concurrent readers
    are safe after the first (single-threaded) call.
    """
    if n > 4:
        raise ValueError("full Hasse diagram is materialized only for 2n <= 8")
    edges = []
    for iota in enumerate_fpf(n):
        for upper in upper_covers(iota):
            edges.append((iota.word, upper.word))
    return tuple(sorted(edges))


def poset_dot(n: int) -> str:
    """DOT rendering of the opposite-Bruhat poset, ranked by word length."""
    lines = ["digraph fpf_poset {", "  rankdir=BT;"]
    by_length: dict[int, list[str]] = {}
    for iota in enumerate_fpf(n):
        name = str(iota)
        l = fpf_length(iota)
        by_length.setdefault(l, []).append(name)
        lines.append(f'  "{name}" [label="{name}\\nl={l}"];')
    for l, names in sorted(by_length.items()):
        joined = "; ".join(f'"{v}"' for v in names)
        lines.append(f"  {{ rank=same; {joined} }}")
    for low, high in hasse_diagram(n):
        lines.append(f'  "{FpfInvolution(low)}" -> "{FpfInvolution(high)}";')
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# ASCII wiring diagrams


def wiring_ascii(iota: FpfInvolution) -> str:
    """Render the arc diagram over 2n outlets.

    Arcs get distinct heights whenever their spans overlap (so crossings and
    nestings stay readable); the final line repeats the one-line word, which
    is what wiring_parse reads back.
    """
    arcs = sorted(iota.arcs, key=lambda a: (a[1] - a[0], a[0]))
    heights: dict[tuple[int, int], int] = {}
    for a, b in arcs:
        clash = [
            h
            for (x, y), h in heights.items()
            if not (y < a or b < x)
        ]
        h = 1
        while h in clash:
            h += 1
        heights[(a, b)] = h
    maxh = max(heights.values(), default=1)
    width = 2 * iota.size - 1
    col = lambda i: 2 * (i - 1)
    grid = [[" "] * width for _ in range(maxh)]
    for (a, b), h in heights.items():
        row = maxh - h
        grid[row][col(a)] = "."
        grid[row][col(b)] = "."
        for x in range(col(a) + 1, col(b)):
            grid[row][x] = "-"
        for r in range(row + 1, maxh):
            grid[r][col(a)] = "|"
            grid[r][col(b)] = "|"
    outlet_row = "".join(
        str((x // 2 + 1) % 10) if x % 2 == 0 else " " for x in range(width)
    )
    lines = ["".join(row).rstrip() for row in grid]
    lines.append(outlet_row)
    lines.append("word: " + ",".join(str(v) for v in iota.word))
    return "\n".join(lines)


def wiring_parse(text: str) -> FpfInvolution:
    """Inverse of wiring_ascii: recover the involution from the word line."""
    for line in text.splitlines():
        if line.startswith("word:"):
            parts = line.split(":", 1)[1].strip().split(",")
            return FpfInvolution(tuple(int(p) for p in parts))
    raise ValueError("no word line found in wiring diagram")
