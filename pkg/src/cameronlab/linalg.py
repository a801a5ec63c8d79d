"""Exact linear algebra over Q.

Two layers:

* :class:`SparseEchelon` keeps an echelon basis of sparse integer vectors whose
  coordinates are arbitrary hashable, totally ordered keys (morphism image
  tuples, say).  Reduction is fraction free: ``v <- a*v - b*p`` followed by
  division by the content, so entries stay small integers.
* :class:`RationalMatrix` is a sparse matrix with :class:`~fractions.Fraction`
  entries offering rank, nullspace and subspace intersection.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping, Sequence

Number = int | Fraction


def _integral(vec: Mapping[Hashable, Number]) -> dict:
    """Scale a rational vector to a primitive integer vector with positive leading entry."""
    items = {k: Fraction(v) for k, v in vec.items() if v}
    if not items:
        return {}
    den = reduce(lcm, (x.denominator for x in items.values()), 1)
    ints = {k: int(x * den) for k, x in items.items()}
    return _primitive(ints)


def _primitive(vec: dict) -> dict:
    if not vec:
        return vec
    g = reduce(gcd, vec.values())
    lead = vec[min(vec)]
    if lead < 0:
        g = -abs(g)
    else:
        g = abs(g)
    if g != 1:
        vec = {k: v // g for k, v in vec.items()}
    return vec


class SparseEchelon:
    """Incrementally maintained echelon form of a span of sparse vectors.

    Each stored row has a distinct leading key (its smallest key).  Adding a
    vector reduces it against the stored rows and keeps the remainder if it is
    nonzero.  The rank is the number of stored rows.
    """

    def __init__(self) -> None:
        self.rows: dict[Hashable, dict] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping[Hashable, Number]) -> dict:
        v = _integral(vec)
        done: dict = {}
        # keys already known not to be pivots are moved aside so we never rescan them
        while v:
            key = min(v)
            pivot = self.rows.get(key)
            if pivot is None:
                done[key] = v.pop(key)
                continue
            a, b = pivot[key], v[key]
            g = gcd(a, b)
            a, b = a // g, b // g
            if a != 1:
                v = {k: a * x for k, x in v.items()}
                done = {k: a * x for k, x in done.items()}
            for k, x in pivot.items():
                y = v.get(k, 0) - b * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        return _primitive(done)

    def add(self, vec: Mapping[Hashable, Number]) -> bool:
        """Insert ``vec``; return True iff it was independent of the current span."""
        r = self.reduce(vec)
        if not r:
            return False
        self.rows[min(r)] = r
        return True

    def contains(self, vec: Mapping[Hashable, Number]) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list[dict]:
        return [self.rows[k] for k in sorted(self.rows)]


def span_rank(vectors: Iterable[Mapping[Hashable, Number]]) -> int:
    ech = SparseEchelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def independent_subset(vectors: Sequence[Mapping[Hashable, Number]]) -> list[int]:
    """Indices of a maximal independent subset, chosen greedily in the given order."""
    ech = SparseEchelon()
    return [i for i, v in enumerate(vectors) if ech.add(v)]


@dataclass
class RationalMatrix:
    rows: int
    cols: int
    entries: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for (i, j), x in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")
            x = Fraction(x)
            if x:
                clean[(i, j)] = x
        self.entries = clean

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]], cols: int | None = None) -> "RationalMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, x in enumerate(row):
                if x:
                    entries[(i, j)] = Fraction(x)
        return cls(len(rows), cols, entries)

    @classmethod
    def from_sparse_rows(cls, rows: Sequence[Mapping[int, Number]], cols: int) -> "RationalMatrix":
        entries = {(i, j): Fraction(x) for i, row in enumerate(rows) for j, x in row.items() if x}
        return cls(len(rows), cols, entries)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, {})

    # access ---------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.entries.get(ij, Fraction(0))

    def row_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [{} for _ in range(self.rows)]
        for (i, j), x in self.entries.items():
            out[i][j] = x
        return out

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), x in self.entries.items():
            out[i][j] = x
        return out

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, {(j, i): x for (i, j), x in self.entries.items()})

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (k, j), x in other.entries.items():
            by_row.setdefault(k, []).append((j, x))
        out: dict[tuple[int, int], Fraction] = {}
        for (i, k), x in self.entries.items():
            for j, y in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), Fraction(0)) + x * y
        return RationalMatrix(self.rows, other.cols, out)

    def apply(self, vec: Sequence[Number]) -> list[Fraction]:
        out = [Fraction(0)] * self.rows
        for (i, j), x in self.entries.items():
            out[i] += x * vec[j]
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    # elimination ------------------------------------------------------------

    def rank(self) -> int:
        return span_rank(r for r in self.row_dicts() if r)

    def rref(self) -> tuple[list[dict[int, Fraction]], list[int]]:
        """Reduced row echelon form: rows as sparse dicts and the pivot columns."""
        ech = SparseEchelon()
        for r in self.row_dicts():
            if r:
                ech.add(r)
        pivots = sorted(ech.rows)
        rows = {p: {k: Fraction(v, ech.rows[p][p]) for k, v in ech.rows[p].items()} for p in pivots}
        # back substitution, bottom pivot first
        for p in reversed(pivots):
            rp = rows[p]
            for q in pivots:
                if q >= p:
                    break
                rq = rows[q]
                c = rq.get(p)
                if c:
                    for k, v in rp.items():
                        y = rq.get(k, 0) - c * v
                        if y:
                            rq[k] = y
                        else:
                            rq.pop(k, None)
        return [rows[p] for p in pivots], pivots

    def nullspace_basis(self) -> list[list[Fraction]]:
        """Basis of the kernel in reduced row echelon form (each vector has leading entry 1)."""
        raw = self._free_column_kernel()
        if not raw:
            return []
        rows, _ = RationalMatrix.from_rows(raw, self.cols).rref()
        return [[r.get(j, Fraction(0)) for j in range(self.cols)] for r in rows]

    def _free_column_kernel(self) -> list[list[Fraction]]:
        """One vector per free column, with entry 1 there and 0 at the other free columns."""
        rows, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [Fraction(0)] * self.cols
            v[free] = Fraction(1)
            for p, row in zip(pivots, rows):
                c = row.get(free)
                if c:
                    v[p] = -c
            basis.append(v)
        return basis

    def nullity(self) -> int:
        return self.cols - self.rank()

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        for row in self.to_dense():
            writer.writerow([str(x) for x in row])
        return buf.getvalue()


def image_intersection(bases: Sequence[Sequence[Sequence[Number]]], dim: int) -> list[list[Fraction]]:
    """Basis of the intersection of the subspaces of Q^dim spanned by each list of vectors.

    A vector lies in span(B) iff it is orthogonal to the orthogonal complement
    of span(B); stacking those complements and taking the nullspace gives the
    intersection.
    """
    constraints: list[list[Fraction]] = []
    for basis in bases:
        if basis:
            comp = RationalMatrix.from_rows(basis, dim).nullspace_basis()
        else:
            comp = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
        constraints.extend(comp)
    if not constraints:
        return [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    return RationalMatrix.from_rows(constraints, dim).nullspace_basis()
