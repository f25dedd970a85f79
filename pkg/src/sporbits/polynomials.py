"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are exponent tuples indexed by a VariableSet; coefficients are
Fractions and zero coefficients are never stored, so equal polynomials compare
equal structurally.  The textual format is `-3/2*m[1,2]*m[2,1]^2`, terms
joined by `+`/`-`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class VariableSet:
    """An ordered list of variable names with a deterministic global index.

    Matrix variables are laid out row-major as m[1,1] ... m[N,N]; elimination
    auxiliaries (e.g. t) live in a distinguished block appended at the end.
    """

    names: tuple[str, ...]
    matrix_size: int = 0
    n_elim: int = 0
    index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        object.__setattr__(self, "index", {nm: k for k, nm in enumerate(self.names)})

    @staticmethod
    def matrix(n: int) -> "VariableSet":
        names = tuple(f"m[{i},{j}]" for i in range(1, n + 1) for j in range(1, n + 1))
        return VariableSet(names, matrix_size=n)

    @staticmethod
    def named(*names: str) -> "VariableSet":
        return VariableSet(tuple(names))

    def with_elimination(self, *extra: str) -> "VariableSet":
        extra = extra or ("t",)
        return VariableSet(
            self.names + tuple(extra),
            matrix_size=self.matrix_size,
            n_elim=self.n_elim + len(extra),
        )

    def __len__(self) -> int:
        return len(self.names)

    def matrix_var(self, i: int, j: int) -> int:
        """Global index of m[i,j] (1-based matrix coordinates)."""
        if not self.matrix_size:
            raise ValueError("not a matrix variable set")
        return (i - 1) * self.matrix_size + (j - 1)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact coefficient: {value!r}")


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("vs", "terms", "_hash")

    def __init__(self, vs: VariableSet, terms: Mapping[Monomial, Fraction] | None = None):
        self.vs = vs
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                c = _as_fraction(coeff)
                if c:
                    clean[mono] = c
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(vs: VariableSet) -> "Polynomial":
        return Polynomial(vs)

    @staticmethod
    def constant(vs: VariableSet, value) -> "Polynomial":
        return Polynomial(vs, {(0,) * len(vs): _as_fraction(value)})

    @staticmethod
    def variable(vs: VariableSet, name_or_index) -> "Polynomial":
        idx = (
            name_or_index
            if isinstance(name_or_index, int)
            else vs.index[name_or_index]
        )
        mono = tuple(1 if k == idx else 0 for k in range(len(vs)))
        return Polynomial(vs, {mono: Fraction(1)})

    @staticmethod
    def matrix_entry(vs: VariableSet, i: int, j: int) -> "Polynomial":
        return Polynomial.variable(vs, vs.matrix_var(i, j))

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.vs.names == other.vs.names
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vs.names, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.vs.names != self.vs.names:
                raise ValueError("mixed variable sets")
            return other
        return Polynomial.constant(self.vs, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, Fraction(0)) + coeff
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        return Polynomial(self.vs, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.vs, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                c = out.get(mono, Fraction(0)) + c1 * c2
                if c:
                    out[mono] = c
                else:
                    out.pop(mono, None)
        return Polynomial(self.vs, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.vs, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        c = _as_fraction(c)
        return Polynomial(self.vs, {m: c * v for m, v in self.terms.items()})

    def evaluate(self, values: Iterable) -> Fraction:
        """Exact evaluation: one rational value per variable, in index order."""
        vals = [_as_fraction(v) for v in values]
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            prod = coeff
            for idx, e in enumerate(mono):
                if e:
                    prod *= vals[idx] ** e
            total += prod
        return total

    def extend(self, vs: VariableSet) -> "Polynomial":
        """Re-index into a variable set whose leading block matches self.vs."""
        if vs.names[: len(self.vs)] != self.vs.names:
            raise ValueError("target variable set does not extend the source")
        pad = (0,) * (len(vs) - len(self.vs))
        return Polynomial(vs, {m + pad: c for m, c in self.terms.items()})

    def restrict(self, vs: VariableSet) -> "Polynomial":
        """Drop trailing variables (which must not occur) down to vs."""
        if self.vs.names[: len(vs)] != vs.names:
            raise ValueError("target variable set is not a prefix of the source")
        k = len(vs)
        out = {}
        for m, c in self.terms.items():
            if any(m[k:]):
                raise ValueError("polynomial involves a dropped variable")
            out[m[:k]] = c
        return Polynomial(vs, out)

    # -- text format ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-sum(m), tuple(-e for e in m))):
            coeff = self.terms[mono]
            factors = []
            for idx, e in enumerate(mono):
                if e == 1:
                    factors.append(self.vs.names[idx])
                elif e > 1:
                    factors.append(f"{self.vs.names[idx]}^{e}")
            body = "*".join(factors)
            mag = abs(coeff)
            if not body:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag}*{body}"
            parts.append(("-" if coeff < 0 else "+") + piece)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    __repr__ = __str__


_TERM_SPLIT = re.compile(r"(?=[+-])")
_FACTOR = re.compile(r"^(?P<name>[A-Za-z_][A-Za-z_0-9]*(?:\[[0-9]+(?:,[0-9]+)*\])?)(?:\^(?P<exp>[0-9]+))?$")


def parse_polynomial(vs: VariableSet, text: str) -> Polynomial:
    """Parse the textual format emitted by str(Polynomial)."""
    text = text.replace(" ", "")
    if not text or text == "0":
        return Polynomial.zero(vs)
    terms: dict[Monomial, Fraction] = {}
    for chunk in _TERM_SPLIT.split(text):
        if not chunk:
            continue
        sign = Fraction(1)
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = Fraction(-1)
            chunk = chunk[1:]
        coeff = sign
        expo = [0] * len(vs)
        for factor in chunk.split("*"):
            if re.fullmatch(r"[0-9]+(/[0-9]+)?", factor):
                coeff *= Fraction(factor)
                continue
            m = _FACTOR.match(factor)
            if not m or m.group("name") not in vs.index:
                raise ValueError(f"cannot parse factor {factor!r}")
            expo[vs.index[m.group("name")]] += int(m.group("exp") or 1)
        mono = tuple(expo)
        c = terms.get(mono, Fraction(0)) + coeff
        if c:
            terms[mono] = c
        else:
            terms.pop(mono, None)
    return Polynomial(vs, terms)
