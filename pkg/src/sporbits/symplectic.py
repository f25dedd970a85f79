"""The algebraic side: the symplectic form J, the antisymmetric matrix MJM^T
in a generic matrix of variables, pfaffians, Fulton ideals of matrix Schubert
varieties, the small catalog of orbit-closure ideals, numeric orbit
classification, and the two computational verifiers (Knutson-Miller and the
orbit degeneration).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from sporbits.groebner import (
    BudgetExceeded,
    GBBudget,
    Ideal,
    buchberger,
    ideal_intersection,
    in_ideal,
    initial_ideal,
    normal_form,
    s_polynomial,
)
from sporbits.involutions import (
    FpfInvolution,
    enumerate_fpf,
    j_bar,
    symplectic_essential_boxes,
)
from sporbits.orders import TermOrder, antidiagonal_order, weight_refined_order
from sporbits.pairperms import pair_permutations
from sporbits.permutations import Permutation, essential_boxes, rank_matrix
from sporbits.polynomials import Polynomial, VariableSet


def symplectic_form(n: int) -> tuple[tuple[int, ...], ...]:
    """The 2n x 2n block-diagonal form with 2x2 blocks ((0,1),(-1,0))."""
    size = 2 * n
    rows = [[0] * size for _ in range(size)]
    for k in range(n):
        rows[2 * k][2 * k + 1] = 1
        rows[2 * k + 1][2 * k] = -1
    return tuple(tuple(r) for r in rows)


def build_mjmt(n: int, vs: VariableSet | None = None) -> list[list[Polynomial]]:
    """MJM^T for the generic 2n x 2n matrix of variables: entry (a,b) is
    sum_k m[a,2k-1] m[b,2k] - m[a,2k] m[b,2k-1]."""
    size = 2 * n
    vs = vs or VariableSet.matrix(size)
    m = lambda i, j: Polynomial.matrix_entry(vs, i, j)
    zero = Polynomial.zero(vs)
    A = [[zero for _ in range(size)] for _ in range(size)]
    for a in range(1, size + 1):
        for b in range(a + 1, size + 1):
            entry = zero
            for k in range(1, n + 1):
                entry = entry + m(a, 2 * k - 1) * m(b, 2 * k) - m(a, 2 * k) * m(b, 2 * k - 1)
            A[a - 1][b - 1] = entry
            A[b - 1][a - 1] = -entry
    return A


# ---------------------------------------------------------------------------
# pfaffians and determinants (work over any commutative ring: Polynomial or
# Fraction entries)


def determinant(A: Sequence[Sequence]) -> object:
    """Exact determinant by minor expansion, memoized over column subsets."""
    size = len(A)
    memo: dict[tuple[int, ...], object] = {}

    def minor(cols: tuple[int, ...]):
        if not cols:
            return 1
        if cols in memo:
            return memo[cols]
        row = size - len(cols)
        total = None
        for pos, c in enumerate(cols):
            entry = A[row][c]
            if _is_zero(entry):
                continue
            sub = minor(cols[:pos] + cols[pos + 1 :])
            term = entry * sub if pos % 2 == 0 else -(entry * sub)
            total = term if total is None else total + term
        if total is None:
            total = _zero_like(A)
        memo[cols] = total
        return total

    return minor(tuple(range(size)))


def pfaffian(A: Sequence[Sequence]) -> object:
    """Pfaffian of an antisymmetric matrix of even size, by the perfect
    matching expansion.  Sign convention: pf ((0,a),(-a,0)) = +a.  Squares to
    the determinant."""
    size = len(A)
    if size % 2 != 0:
        raise ValueError("pfaffian needs even size")
    for i in range(size):
        if not _is_zero(A[i][i]):
            raise ValueError("diagonal must vanish")
        for j in range(i + 1, size):
            if not _equal(A[i][j], -A[j][i]):
                raise ValueError("matrix is not antisymmetric")
    memo: dict[tuple[int, ...], object] = {}

    def pf(indices: tuple[int, ...]):
        if not indices:
            return 1
        if indices in memo:
            return memo[indices]
        first, rest = indices[0], indices[1:]
        total = None
        for pos, j in enumerate(rest):
            entry = A[first][j]
            if _is_zero(entry):
                continue
            sub = pf(rest[:pos] + rest[pos + 1 :])
            term = entry * sub if pos % 2 == 0 else -(entry * sub)
            total = term if total is None else total + term
        if total is None:
            total = _zero_like(A)
        memo[indices] = total
        return total

    return pf(tuple(range(size)))


def pfaffian_of_indices(A: Sequence[Sequence], indices: Sequence[int]) -> object:
    """Pfaffian of the submatrix of A on the given 1-based rows = columns."""
    idx = [i - 1 for i in indices]
    sub = [[A[a][b] for b in idx] for a in idx]
    return pfaffian(sub)


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, Polynomial) else x == 0


def _equal(x, y) -> bool:
    if isinstance(x, Polynomial) or isinstance(y, Polynomial):
        return x == y
    return x == y


def _zero_like(A):
    probe = A[0][0] if A else 0
    return Polynomial.zero(probe.vs) if isinstance(probe, Polynomial) else Fraction(0)


# ---------------------------------------------------------------------------
# Fulton / Schubert ideals


def _minor(vs: VariableSet, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    sub = [[Polynomial.matrix_entry(vs, i, j) for j in cols] for i in rows]
    return determinant(sub)


def fulton_minors(
    p: Permutation, vs: VariableSet | None = None
) -> list[tuple[tuple[int, ...], tuple[int, ...], Polynomial]]:
    """(rows, cols, minor) for every rank condition at an essential box: all
    (r+1) x (r+1) minors of the northwest i x j submatrix."""
    vs = vs or VariableSet.matrix(p.size)
    out = []
    for (i, j, r) in sorted(essential_boxes(p)):
        for rows in itertools.combinations(range(1, i + 1), r + 1):
            for cols in itertools.combinations(range(1, j + 1), r + 1):
                out.append((rows, cols, _minor(vs, rows, cols)))
    return out


def fulton_generators(p: Permutation, vs: VariableSet | None = None) -> Ideal:
    """The Fulton generators of the matrix Schubert ideal I_p; the identity
    permutation yields the zero ideal."""
    vs = vs or VariableSet.matrix(p.size)
    return Ideal(vs, [poly for _, _, poly in fulton_minors(p, vs)])


schubert_ideal = fulton_generators


def union_schubert_ideal(
    perms: Sequence[Permutation],
    vs: VariableSet | None = None,
    budget: GBBudget | None = None,
) -> Ideal:
    """Ideal of the union of matrix Schubert varieties: the intersection of
    the Fulton ideals, computed by iterated elimination."""
    if not perms:
        raise ValueError("need at least one permutation")
    size = perms[0].size
    if any(p.size != size for p in perms):
        raise ValueError("size mismatch")
    vs = vs or VariableSet.matrix(size)
    inner = antidiagonal_order(vs)
    result = fulton_generators(perms[0], vs)
    for p in perms[1:]:
        if result.is_zero():
            return result
        result = ideal_intersection(result, fulton_generators(p, vs), budget, inner=inner)
    return result


# ---------------------------------------------------------------------------
# the orbit-ideal catalog


class NotInCatalog(ValueError):
    """The requested orbit closure has no known generating set."""


def orbit_ideal(iota: FpfInvolution, vs: VariableSet | None = None) -> Ideal:
    """Known generators for the orbit-closure ideal of iota.

    Covered shapes: j_bar(n) (dense orbit, zero ideal); 4321 + j_bar(n-2);
    the two explicit size-6 catalog entries 216543 and 351624; and the
    one-box shape (box at (2r-1, 2r) with rank 2r-2) whose single Fulton
    condition is a perfect square with pfaffian square root.  Everything else
    is reported as out of catalog.
    """
    n = iota.n
    vs = vs or VariableSet.matrix(2 * n)
    if iota == j_bar(n):
        return Ideal(vs, [])
    A = build_mjmt(n, vs)

    def pf(indices):
        return pfaffian_of_indices(A, indices)

    if iota.word[:4] == (4, 3, 2, 1) and (
        n == 2 or iota.word[4:] == tuple(v + 4 for v in j_bar(n - 2).word)
    ):
        return Ideal(vs, [pf([1, 2]), pf([1, 3])])
    if iota.word == (2, 1, 6, 5, 4, 3):
        return Ideal(vs, [pf([1, 2, 3, 4]), pf([1, 2, 3, 5])])
    if iota.word == (3, 5, 1, 6, 2, 4):
        return Ideal(vs, [pf([1, 2]), pf([1, 2, 3, 4])])
    boxes = sorted(symplectic_essential_boxes(iota))
    if len(boxes) == 1:
        i, j, rank = boxes[0]
        if j == i + 1 and i % 2 == 1 and rank == i - 1:
            r = (i + 1) // 2
            return Ideal(vs, [pf(list(range(1, 2 * r + 1)))])
    raise NotInCatalog(f"no known generators for {iota}")


# ---------------------------------------------------------------------------
# exact linear algebra over the rationals (for classification and sampling)

Matrix = list[list[Fraction]]


def mat_from(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def mat_identity(size: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    return [
        [sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in zip(*B)]
        for row in A
    ]


def mat_transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)]


def mat_rank(A: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(r) for r in A]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(ncols):
        pivot = next(
            (r for r in range(pivot_row, len(rows)) if rows[r][col] != 0), None
        )
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        inv = Fraction(1) / rows[pivot_row][col]
        rows[pivot_row] = [x * inv for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        rank += 1
        if pivot_row == len(rows):
            break
    return rank


def classify_orbit(M: Sequence[Sequence]) -> FpfInvolution:
    """The involution indexing the orbit of an invertible matrix: the unique
    iota whose rank matrix matches the northwest ranks of MJM^T."""
    Mq = mat_from(M)
    size = len(Mq)
    if size % 2 != 0 or any(len(r) != size for r in Mq):
        raise ValueError("need a square matrix of even size")
    if mat_rank(Mq) != size:
        raise ValueError("singular input")
    n = size // 2
    J = mat_from(symplectic_form(n))
    A = mat_mul(mat_mul(Mq, J), mat_transpose(Mq))
    ranks = tuple(
        tuple(mat_rank([row[:j] for row in A[:i]]) for j in range(1, size + 1))
        for i in range(1, size + 1)
    )
    for iota in enumerate_fpf(n):
        if rank_matrix(iota.permutation()) == ranks:
            return iota
    raise ValueError("no involution matches the rank profile (bug?)")


def random_lower_triangular(size: int, rng) -> Matrix:
    """Random invertible lower-triangular matrix with small integer entries."""
    B = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        B[i][i] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
        for j in range(i):
            B[i][j] = Fraction(rng.randint(-3, 3))
    return B


def random_symplectic(n: int, rng, n_transvections: int = 4) -> Matrix:
    """Random element of Sp_n over the rationals: a product of symplectic
    transvections I + lam * (J v^T) v, which preserve MJM^T = J exactly."""
    size = 2 * n
    J = mat_from(symplectic_form(n))
    S = mat_identity(size)
    for _ in range(n_transvections):
        v = [Fraction(rng.randint(-2, 2)) for _ in range(size)]
        if all(x == 0 for x in v):
            v[rng.randrange(size)] = Fraction(1)
        lam = Fraction(rng.randint(-2, 2), rng.choice([1, 2]))
        Jvt = [sum(J[i][k] * v[k] for k in range(size)) for i in range(size)]
        T = [
            [Fraction(int(i == j)) + lam * Jvt[i] * v[j] for j in range(size)]
            for i in range(size)
        ]
        S = mat_mul(S, T)
    if mat_mul(mat_mul(S, J), mat_transpose(S)) != J:
        raise AssertionError("transvection product failed to preserve J")
    return S


# ---------------------------------------------------------------------------
# verifiers


def verify_knutson_miller(p: Permutation, budget: GBBudget | None = None) -> bool:
    """Check that the Fulton generators are a Groebner basis under the
    antidiagonal order: every generator leads with its antidiagonal term and
    every S-polynomial reduces to zero against the generators."""
    budget = budget or GBBudget()
    start = time.monotonic()
    vs = VariableSet.matrix(p.size)
    order = antidiagonal_order(vs)
    minors = fulton_minors(p, vs)
    gens = [poly for _, _, poly in minors]
    for rows, cols, poly in minors:
        antidiag = {
            vs.matrix_var(rows[k], cols[len(cols) - 1 - k]): 1 for k in range(len(rows))
        }
        mono = tuple(antidiag.get(v, 0) for v in range(len(vs)))
        if order.leading_monomial(poly.terms) != mono:
            return False
    for i, j in itertools.combinations(range(len(gens)), 2):
        if time.monotonic() - start > budget.max_seconds:
            raise BudgetExceeded(
                "time cap", {"pairs_processed": i * len(gens) + j, "basis_size": len(gens)}
            )
        if not normal_form(s_polynomial(gens[i], gens[j], order), gens, order).is_zero():
            return False
    return True


def column_weights(vs: VariableSet) -> tuple[int, ...]:
    """The degeneration weights: m[i,j] weighs ceil(j/2) - 1, auxiliaries 0."""
    n = vs.matrix_size
    out = []
    for name in vs.names:
        if name.startswith("m[") and vs.index[name] < n * n:
            j = int(name[:-1].split(",")[1])
            out.append((j + 1) // 2 - 1)
        else:
            out.append(0)
    return tuple(out)


@dataclass
class DegenerationReport:
    """Outcome of one degeneration check: initial ideal of the orbit ideal
    versus initial ideal of the intersection of pair-permutation Schubert
    ideals."""

    iota: FpfInvolution
    pair_perms: tuple[Permutation, ...]
    left_generators: tuple[str, ...]
    right_generators: tuple[str, ...]
    equal: bool | None
    witnesses: tuple[str, ...] = ()
    budget_exhausted: str | None = None
    timings: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "iota": self.iota.to_json(),
            "pair_permutations": [p.to_json() for p in self.pair_perms],
            "left_initial_generators": list(self.left_generators),
            "right_initial_generators": list(self.right_generators),
            "equal": self.equal,
            "witnesses": list(self.witnesses),
            "budget_exhausted": self.budget_exhausted,
            "timings": self.timings,
        }


def verify_degeneration(
    iota: FpfInvolution, budget: GBBudget | None = None
) -> DegenerationReport:
    """Compare init(orbit ideal) with init(intersection of Fulton ideals over
    the pair permutations), both under the column-weight vector with the
    antidiagonal tie-break.  Budget exhaustion is reported as an outcome
    distinct from inequality."""
    budget = budget or GBBudget()
    vs = VariableSet.matrix(iota.size)
    weights = column_weights(vs)
    tie = antidiagonal_order(vs)
    refined = weight_refined_order(vs, weights, tie)
    timings: dict[str, float] = {}
    pp = pair_permutations(iota)
    try:
        t0 = time.monotonic()
        left_src = orbit_ideal(iota, vs)
        L = initial_ideal(left_src, weights, tie_break=tie, budget=budget)
        timings["left_seconds"] = round(time.monotonic() - t0, 3)
        t0 = time.monotonic()
        right_src = union_schubert_ideal([p for p in pp.perms], vs, budget)
        R = initial_ideal(right_src, weights, tie_break=tie, budget=budget)
        timings["right_seconds"] = round(time.monotonic() - t0, 3)
        t0 = time.monotonic()
        gl = L.groebner_basis(refined, budget)
        gr = R.groebner_basis(refined, budget)
        equal = gl == gr
        witnesses = []
        if not equal:
            witnesses = [str(g) for g in gl if not in_ideal(g, gr, refined)]
            witnesses += [str(g) for g in gr if not in_ideal(g, gl, refined)]
        timings["compare_seconds"] = round(time.monotonic() - t0, 3)
    except BudgetExceeded as exc:
        return DegenerationReport(
            iota=iota,
            pair_perms=pp.perms,
            left_generators=(),
            right_generators=(),
            equal=None,
            budget_exhausted=f"{exc.reason}: {exc.stats}",
            timings=timings,
        )
    return DegenerationReport(
        iota=iota,
        pair_perms=pp.perms,
        left_generators=tuple(str(g) for g in L.generators),
        right_generators=tuple(str(g) for g in R.generators),
        equal=equal,
        witnesses=tuple(witnesses),
        timings=timings,
    )
